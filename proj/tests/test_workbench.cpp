#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "workbench.hpp"

using namespace ncorr;

namespace {

errc thrown_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code();
    }
    return errc::ok;
}

bool have_dataset() {
    std::ifstream in(ZEROS_FILE);
    return in.good();
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

workbench tiny_compare_bench(const std::string& tag) {
    workbench wb;
    wb.set("n", "2");
    wb.set("N", "5");
    wb.set("T", "1");
    wb.set("matrices", "300");
    wb.set("seed", "42");
    wb.set("methods", "mc,determinant");
    wb.set("cache_dir", "wb_cache_" + tag);
    return wb;
}

}  // namespace

TEST_CASE("configuration entries are validated by name") {
    workbench wb;
    CHECK(wb.get("N") == "20");
    wb.set("N", "7");
    CHECK(wb.get("N") == "7");
    CHECK(thrown_code([&] { wb.set("bogus_key", "1"); }) == errc::invalid);
    CHECK(thrown_code([&] { wb.get("bogus_key"); }) == errc::invalid);
    CHECK(std::string(workbench::version()).size() > 0);
}

TEST_CASE("bad values and bad commands surface as config-error exits") {
    workbench wb;
    wb.set("N", "not_a_number");
    run_result r = wb.run("compare");
    CHECK(r.exit_code == 2);
    CHECK(r.records.find("\"record\":\"error\"") != std::string::npos);

    workbench wb2;
    run_result r2 = wb2.run("unheard-of");
    CHECK(r2.exit_code == 2);
}

TEST_CASE("cross-method comparison passes and embeds the configuration") {
    workbench wb = tiny_compare_bench("a");
    run_result r = wb.run("compare");
    CHECK(r.exit_code == 0);
    CHECK(r.table.find("overall: pass") != std::string::npos);
    auto lines = lines_of(r.records);
    CHECK(lines.size() >= 4);  // config, two methods, pair, summary
    for (const auto& ln : lines) {
        CHECK(ln.find("\"config\":") != std::string::npos);
        CHECK(ln.find("\"record\":") != std::string::npos);
    }
}

TEST_CASE("identical configuration reruns are byte-identical") {
    workbench wb1 = tiny_compare_bench("b");
    run_result r1 = wb1.run("compare");
    workbench wb2 = tiny_compare_bench("b");
    run_result r2 = wb2.run("compare");
    CHECK(r1.records == r2.records);
    CHECK(r1.table == r2.table);
    CHECK(r1.exit_code == r2.exit_code);
}

TEST_CASE("a zero tolerance turns statistical scatter into failure") {
    workbench wb = tiny_compare_bench("c");
    wb.set("tolerance", "0");
    run_result r = wb.run("compare");
    CHECK(r.exit_code == 1);
    CHECK(r.table.find("FAIL") != std::string::npos);
}

TEST_CASE("contour methods dispatch through the comparison command") {
    workbench wb;
    wb.set("n", "1");
    wb.set("N", "10");
    wb.set("T", "1");
    wb.set("phi_width", "0.9");
    wb.set("methods", "contour,contour_q1,determinant");
    run_result r = wb.run("compare");
    CHECK(r.exit_code == 0);
    CHECK(r.records.find("\"method\":\"contour\"") != std::string::npos);
    CHECK(r.records.find("\"method\":\"contour_q1\"") != std::string::npos);
}

TEST_CASE("kernel verification command reports per-identity deviations") {
    workbench wb;
    wb.set("N", "5");
    wb.set("trials", "15");
    run_result r = wb.run("verify-jstar");
    CHECK(r.exit_code == 0);
    CHECK(r.records.find("\"record\":\"check\"") != std::string::npos);
    CHECK(r.records.find("\"pass\":true") != std::string::npos);

    workbench strict;
    strict.set("N", "5");
    strict.set("trials", "15");
    strict.set("tolerance", "1e-18");
    CHECK(strict.run("verify-jstar").exit_code == 1);
}

TEST_CASE("sampling command populates and reuses the cache") {
    workbench wb;
    wb.set("N", "4");
    wb.set("matrices", "5");
    wb.set("seed", "5");
    wb.set("cache_dir", "wb_cache_d");
    run_result r1 = wb.run("sample");
    CHECK(r1.exit_code == 0);
    CHECK(r1.records.find("\"record\":\"sample_cache\"") != std::string::npos);
    CHECK(r1.records.find("\"count\":5") != std::string::npos);
    run_result r2 = wb.run("sample");
    CHECK(r2.records == r1.records);
}

TEST_CASE("decay command fits a slope that beats the support-gap bound") {
    workbench wb;
    wb.set("n", "2");
    wb.set("N", "8");
    wb.set("T", "1.2");
    wb.set("phi_width", "0.9");
    wb.set("g_width", "1.5,2");
    run_result r = wb.run("decay");
    CHECK(r.exit_code == 0);
    CHECK(r.records.find("\"record\":\"decay_row\"") != std::string::npos);
    CHECK(r.records.find("\"record\":\"slope\"") != std::string::npos);
}

TEST_CASE("zeta command compares both statistics against predictions" *
          doctest::skip(!have_dataset())) {
    workbench wb;
    wb.set("zeros", ZEROS_FILE);
    wb.set("fejer_beta", "0.8");
    run_result r = wb.run("zeta");
    CHECK(r.exit_code == 0);
    CHECK(r.records.find("\"record\":\"montgomery\"") != std::string::npos);
    CHECK(r.records.find("\"record\":\"zeta_ncorr\"") != std::string::npos);
    CHECK(r.records.find("\"conjectural\":false") != std::string::npos);
}

TEST_CASE("plot data command emits one row per bin" * doctest::skip(!have_dataset())) {
    workbench wb;
    wb.set("zeros", ZEROS_FILE);
    wb.set("bins", "24");
    wb.set("umax", "3");
    run_result r = wb.run("plotdata");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.records);
    int rows = 0;
    for (const auto& ln : lines)
        if (ln.find("\"record\":\"plot_row\"") != std::string::npos) ++rows;
    CHECK(rows == 24);
}
