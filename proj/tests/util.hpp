#pragma once

// Shared helpers for the test binaries: seeded random polynomials over an
// arbitrary table and a tiny process wrapper for driving the CLI.

#include "kt/group_action.hpp"
#include "kt/poly.hpp"

#include <cstdio>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace ktt {

using namespace kt;

inline Monomial mono(const VarTablePtr& tab,
                     std::initializer_list<std::pair<const char*, unsigned>> exps) {
    Monomial m(tab->size(), 0);
    for (const auto& [name, e] : exps) m[tab->require(name)] = e;
    return m;
}

inline Poly random_poly(std::mt19937_64& eng, const VarTablePtr& tab, int terms, long maxdeg) {
    Poly p(tab);
    for (int k = 0; k < terms; ++k) {
        Monomial m(tab->size(), 0);
        long budget = rand_int(eng, 0, maxdeg);
        for (long d = 0; d < budget; ++d)
            m[static_cast<size_t>(rand_int(eng, 0, tab->size() - 1))] += 1;
        p = p + Poly::term(tab, m, random_rational(eng, 8, 5));
    }
    return p;
}

struct CliResult {
    int status = -1;  // exit code, or -1 when the process did not exit cleanly
    std::string out;
};

// Runs the CLI with the given argument string, capturing stdout; stderr is
// dropped so expected usage errors do not pollute the test log.
inline CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(KTCLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    CliResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int rc = pclose(pipe);
    if (rc != -1 && WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
    return r;
}

}  // namespace ktt
