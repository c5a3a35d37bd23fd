#pragma once

#include "calib/mpoly.hpp"
#include "calib/polyalg.hpp"

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace calib {

// coassociative: normals 4..6, tangents 0..3; associative: normals 0..3,
// tangents 4..6; Cayley: normals 4..7, tangents 0..3.
enum class SffKind { coassociative, associative, cayley };
std::string to_string(SffKind k);
SffKind parse_sff_kind(const std::string& s);

struct SffEntry {
    int alpha, i, j;  // i <= j
};
std::string entry_name(int alpha, int i, int j);  // "h" + digits, i and j sorted

struct ConstraintSpace {
    SffKind kind;
    std::vector<SffEntry> unknowns;
    std::vector<std::vector<Rat>> relations;  // one row per relation, 4 per tangent index
    std::size_t rank = 0;
    std::vector<std::vector<Rat>> kernel;
    std::size_t dimension() const { return kernel.size(); }
};

ConstraintSpace sff_constraint_space(SffKind kind);

struct RemovalReport {
    std::size_t removed = 0;
    std::size_t dimension = 0;
    bool independent = false;  // removed row not in the span of the others
};
RemovalReport constraint_space_without(SffKind kind, std::size_t relation);

class SffTensor {
public:
    explicit SffTensor(SffKind kind) : kind_(kind) {}
    SffKind kind() const { return kind_; }
    MPoly h(int alpha, int i, int j) const;
    void set(int alpha, int i, int j, const MPoly& v);
    // Relation values; all zero iff the tensor is admissible.
    std::vector<MPoly> relation_values() const;

private:
    SffKind kind_;
    std::map<std::array<int, 3>, MPoly> h_;
};

using GroupedVec = std::vector<std::vector<MPoly>>;

// The free grouped coordinates as symbols (entries may carry a sign).
GroupedVec grouped_symbols(SffKind kind);
SffTensor group_dependents(SffKind kind, const GroupedVec& free);

enum class QuadFormKind { L0, L, M };
PolyMatrix build_quadform(QuadFormKind kind, const std::vector<MPoly>& args);

// Sum h^2 + sum_k sum_{a,b} l_a l_b h_{n(a) b k} h_{n(b) a k}.
MPoly laplacian_raw(const SffTensor& h, const std::vector<MPoly>& lambda);
// Sum of the grouped block forms.
MPoly laplacian_blocks(SffKind kind, const GroupedVec& free, const std::vector<MPoly>& lambda);
bool laplacian_quadform_identity(SffKind kind);

using SffNumeric = std::array<std::array<std::array<double, 4>, 4>, 8>;  // [alpha][i][j], tangent 0..3
SffNumeric random_constrained_sff(SffKind kind, std::mt19937_64& rng);
double wang_specialization_check(SffKind kind, const std::vector<double>& lambda, const SffNumeric& h);

struct IdentityCheck {
    std::string id;
    bool holds = false;
    std::string detail;
};
// coassociative: bL0_1, bL_1, bL_3; cayley: detM_f, disc_g.
std::vector<IdentityCheck> det_identity_suite(SffKind kind);

// det M(w, l1, l2, l3) / 4 reduced to s1, s2, w on the locus (cached).
const MPoly& det_M_reduced();
// det L0 in l1, l2, l3 (cached).
const MPoly& det_L0_poly();

}  // namespace calib
