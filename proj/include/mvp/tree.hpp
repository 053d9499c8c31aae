#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mvp/laurent.hpp"
#include "mvp/rational.hpp"
#include "mvp/report.hpp"

namespace mvp {

// Vertices of the (q+1)-regular tree around a base vertex v, addressed by
// branch paths: the first step is a direction in {0..q} (q is the marked
// neighbor w), later steps are in {0..q-1}. Within level L the flat index is
// a0 * q^(L-1) + sum_{j>=1} a_j * q^(L-1-j), so the vertices of the subtree
// in direction a0 form one contiguous block per level.
std::vector<int> parse_address(const std::string& s, long q);
std::string format_address(const std::vector<int>& path);

// How values beyond the stored radius are defined. `none` means any access
// past the ball is a hard error; `zero` and `constant` extend exactly, so
// Laplacians and horocycle averages stay computable at every distance.
enum class Extension { none, zero, constant };

struct TreeFn {
    long q = 2;
    int radius = 0;
    Extension ext = Extension::none;
    Rational ext_value;  // meaningful for Extension::constant only
    std::string provenance = "explicit";
    std::vector<Rational> values;        // levels 0..radius, concatenated
    std::vector<std::size_t> offsets;    // offsets[l] = start of level l

    static std::size_t ball_size(long q, int radius);
    static TreeFn make_zeroed(long q, int radius);  // allocates, all zeros
    static TreeFn make_chi(long q, int radius);
    static TreeFn make_constant(const Rational& c, long q, int radius);
    static TreeFn make_busemann(long q, int radius, int end_dir = 0);
    static TreeFn make_random(long q, int radius, std::uint64_t seed);

    std::size_t level_size(int level) const;
    Rational& at(int level, std::size_t idx);
    const Rational& at(int level, std::size_t idx) const;
    Rational value(const std::vector<int>& path) const;  // honors extension

    ordered_json to_json() const;
    static TreeFn from_json(const ordered_json& j);
};

// Neighbor-average-minus-value operator, exact. For Extension::none the
// result lives on radius-1 (radius 0 is an error); for the exact extensions
// the result lives on radius+1 with zero extension beyond.
TreeFn tree_laplacian(const TreeFn& f);
TreeFn tree_laplacian_serial(const TreeFn& f);  // reference implementation

// Average over the q^n vertices at distance n avoiding marked_dir (default
// q, the marked neighbor). n = 0 gives f(v). Beyond the stored radius the
// extensions answer exactly; Extension::none throws std::out_of_range.
Rational horocycle_avg(const TreeFn& f, int n, int marked_dir = -1);

// Plain sum over the whole distance-n circle (all q+1 directions).
Rational sphere_sum(const TreeFn& f, int n);

bool is_harmonic_interior(const TreeFn& f);

// Per-direction level sums of the tower f, laplacian f, ..., laplacian^kmax f,
// collected in one streaming pass so batch checks reuse them.
// block(i, m, dir) = sum of (laplacian^i f) over the level-m vertices whose
// first step is dir; cone_avg and circle sums derive from the blocks.
struct HorocycleData {
    long q = 2;
    int kmax = 0;
    int mmax = 0;
    Rational center;                       // f(v)
    std::vector<Rational> tower_center;    // (laplacian^i f)(v)
    // blocks[i][m] has q+1 entries for 1 <= m <= limit[i]; m = 0 queries
    // are answered from tower_center.
    std::vector<std::vector<std::vector<Rational>>> blocks;
    std::vector<int> limit;

    bool has(int i, int m) const;
    Rational cone_avg(int i, int m, int marked_dir) const;  // (Δ^i f)(C_m)
    Rational circle_sum(int i, int m) const;
};

HorocycleData collect_horocycle_data(const TreeFn& f, int kmax, int mmax);

// Exact identity f(v) + q^n f(C_2n) = sum_{k<=n} a_{n,k} (laplacian^k f)(C_n)
// with coefficients from the decomposition table.
CheckReport cone_identity_check(const TreeFn& f, int n, const CoeffTable& table,
                                int marked_dir = -1);
CheckReport cone_identity_check(const TreeFn& f, int n);

struct PartialSumSeq {
    std::string kind;  // "cone" | "full-boundary" | "horosummability"
    std::vector<std::pair<int, Rational>> entries;  // n = 1..N

    std::string to_jsonl() const;  // {"kind","n","num","den"} per line
};

// Entry n = sum_{i<=n} (q+1)^i (gamma_i(n) + q^n gamma_i(-n)) (Δ^i f)(C_n),
// from the solved gamma polynomials.
PartialSumSeq horocyclic_partial_sums(const TreeFn& f, int N, int marked_dir = -1);
PartialSumSeq horocyclic_partial_sums(const HorocycleData& data, int N, int marked_dir = -1);

// Entry n = q^n f(C_2n): the decay witness the main convergence claim needs.
PartialSumSeq horosummability_seq(const TreeFn& f, int N, int marked_dir = -1);

// Entry n = (q/(q+1)) sum_i a_{n,i} (1/q^n) sum_{circle n} laplacian^i f.
PartialSumSeq full_boundary_partial_sums(const TreeFn& f, int N);

// Asserts full-boundary entry * (q+1) = sum of the q+1 per-cone entries
// (each circle vertex lies in q of the q+1 cones, which is where the
// q/(q+1) prefactor comes from).
CheckReport full_boundary_cross_check(const TreeFn& f, int N);

// Limit detection for exact sequences: window of 3 equal entries, else a
// constant-ratio geometric tail (|ratio| < 1) summed in closed form.
struct LimitEstimate {
    bool exact = false;
    Rational value;
    std::string method;  // "constant" | "geometric" | "last-entry"
};
LimitEstimate detect_limit(const std::vector<Rational>& seq);

struct HolomResult {
    std::vector<Rational> A_seq;  // h(C_n), n = 0..N
    LimitEstimate A;
    std::vector<Rational> B_seq;  // q^n (h(C_n) - A), n = 1..N
    bool identity_pass = false;   // h(v) + q^n h(C_2n) = (1+q^n) h(C_n)
    bool value_pass = false;      // A + B_N recovers h(v)
    CheckReport report;
};

// Two-stage evaluation for harmonic h: A = limit of the plain horocycle
// averages, then B_n = q^n (h(C_n) - A). When A is exactly attained the
// check demands A + B_N = h(v) exactly; otherwise it compares numerically
// against tol. Throws std::invalid_argument if h is not harmonic.
HolomResult holom_check(const TreeFn& h, int N, double tol = 1e-10,
                        int marked_dir = -1);

}  // namespace mvp
