#pragma once

// Orchestration behind the C surface and the command-line tool: flat
// key = value configuration with validation, method dispatch, and structured
// line-delimited records plus a human-readable table.
//
// Commands: compare (cross-method agreement in sigma units), sample (populate
// the eigenangle cache), verify-jstar (kernel regression against hand-coded
// closed forms), decay (stratum suppression slope), zeta (zero-ordinate
// statistics against predictions), plotdata (pair-correlation density
// columns).  Reruns with identical configuration and seed produce
// byte-identical records; every record embeds the resolved configuration.

#include <map>
#include <string>

namespace ncorr {

struct run_result {
    int exit_code = 0;    // 0 pass, 1 tolerance fail, 2 config error, 3 numerical error
    std::string records;  // line-delimited JSON, one self-contained record per line
    std::string table;    // human-readable summary
};

class workbench {
  public:
    workbench();

    // known keys only; a bad key or value is reported with the constraint named
    void set(const std::string& key, const std::string& value);
    std::string get(const std::string& key) const;

    run_result run(const std::string& command);

    static const char* version();

  private:
    std::map<std::string, std::string> cfg_;
};

}  // namespace ncorr
