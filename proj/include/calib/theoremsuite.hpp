#pragma once

#include "calib/bernstein.hpp"
#include "calib/univariate.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace calib {

struct CheckRecord {
    std::string id;
    std::string anchor;
    bool verified = false;
    nlohmann::json detail;  // deterministic; never contains timings
    double wall_time_ms = 0.0;
};

nlohmann::json to_json(const CheckRecord& r);
bool all_verified(const std::vector<CheckRecord>& rs);

// Positivity test for a x^4 + b x^3 + c x^2 + d x + e with a > 0.
// (i): disc > 0 and 8ac - 3b^2 >= 0; (ii): disc > 0, 8ac - 3b^2 < 0 and
// 64a^3 e - 16a^2 c^2 + 16ab^2 c - 16a^2 bd - 3b^4 > 0.
struct QuarticTest {
    Rat disc, p, d;
    bool cond_i = false;
    bool cond_ii = false;
    bool no_real_roots() const { return cond_i || cond_ii; }
};
QuarticTest quartic_root_test(const UPoly& q);

// Step-by-step certificate records. eps must lie in (0, 1/10].
std::vector<CheckRecord> run_thm_coass(const Rat& eps = Rat(1, 10));
// Step 2 alone; eps = 0 is allowed and then gives a nonnegative-only record.
CheckRecord check_coass_step2(const Rat& eps);
std::vector<CheckRecord> run_thm_cayley(const Rat& eps = Rat(1, 10));
std::vector<CheckRecord> run_appendix_claim();
std::vector<CheckRecord> run_locus_lemmas();
// Determinant, Laplacian and Cayley-function identities.
std::vector<CheckRecord> run_identities();

// The largest real root of the tau polynomial.
AlgNum tau_root();
// Rational enclosure of tau of width <= width.
RootInterval tau_enclosure(const Rat& width);

// Pieces of the Cayley pipeline, cached after the first call.
struct AppendixData {
    MPoly f_true;    // det M / 4 in s1, s2, w
    MPoly quartic;   // 21 f - (6w^6 + 20w^4) g at s2 = -v - w s1, in s1, w, v
    MPoly delta;     // discriminant in s1 of the quartic, in w, v
    std::vector<MPoly> r;  // r_0..r_12 in w
};
const AppendixData& appendix_data();

// One corpus line: "id ; poly ; a ; b ; degree ; basis".
struct CorpusEntry {
    std::string id, poly, a, b;
    unsigned degree = 0;
    Basis basis = Basis::scaled;
};
std::vector<CorpusEntry> parse_corpus(const std::string& text);
// Report object {id, degree_claimed, degree_found, verdict, margin_min_coeff, verified}.
nlohmann::json run_corpus_entry(const CorpusEntry& e);
// The certificates named in the two theorem proofs, in corpus form.
std::string builtin_corpus();

}  // namespace calib
