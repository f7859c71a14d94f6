#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hilap/tree.hpp"

namespace hilap {

// How the window represents the space outside itself. In compact mode the
// window root is the whole space (eigenvalue 0 on constants). In
// mean_zero_tail mode the balls above the root act on mean-zero functions as
// the scalar tail rate τ = Σ_{T ⊋ root} C(T), stored analytically.
enum class Mode { compact, mean_zero_tail };

// Positive jump rate C(B) per internal ball; the generator data.
class ChoiceFunction {
public:
    // `rates` holds one entry per ball; entries at leaves are ignored.
    ChoiceFunction(const BallTree& t, std::vector<double> rates, Mode mode,
                   double tail_rate = 0.0);

    const BallTree& tree() const { return *tree_; }
    Mode mode() const { return mode_; }
    double tail_rate() const { return tail_rate_; }
    double rate(BallId b) const;

    // Folds the tail rate into the root rate, producing the compact window
    // operator with identical λ(B) on every ball.
    ChoiceFunction compactified() const;

private:
    friend double lambda_of(const ChoiceFunction& c, BallId b);

    const BallTree* tree_;
    std::vector<double> rates_;
    std::vector<double> lambda_; // chain sums, cached at construction
    double tail_rate_;
    Mode mode_;
};

// C(B) = 1/w(B) - 1/w(parent); λ(B) = 1/w(B). In mean_zero_tail mode the
// caller declares the limit of λ above the window (tail_lambda < 1/w(root)).
ChoiceFunction choice_standard(const BallTree& t, const WhitneyMap& w, Mode mode = Mode::compact,
                               double tail_lambda = 0.0);

// C(B) = (1 - p^-alpha) diam(B)^-alpha on a p-adic window; the tail rate is
// the geometric series over balls above the root, so λ(B) = diam(B)^-alpha
// exactly (mean_zero_tail mode).
ChoiceFunction choice_alpha(const BallTree& t, int p, double alpha);

// λ(B) = Σ_{T ⊇ B} C(T) + τ. Internal balls only.
double lambda_of(const ChoiceFunction& c, BallId b);

// Locally constant function at window resolution: one value per leaf cell.
struct CellFunction {
    const BallTree* tree = nullptr;
    std::vector<double> values; // indexed like tree->leaves()

    static CellFunction zeros(const BallTree& t);
    static CellFunction constant(const BallTree& t, double v);
    // Normalized indicator f_B = 1_B / m(B).
    static CellFunction indicator(const BallTree& t, BallId b);

    double integral() const;       // ∫ f dm
    double sup_norm() const;       // ‖f‖_∞ over leaves
    double l1_norm() const;        // ∫ |f| dm
    double l2_norm_sq() const;     // ∫ f² dm
    CellFunction& operator+=(const CellFunction& o);
    CellFunction& operator-=(const CellFunction& o);
    CellFunction& operator*=(double s);
};

// m-weighted inner product Σ f_i g_i m_i.
double inner_product(const CellFunction& f, const CellFunction& g);

// f_{B,B'} = 1_B/m(B) - 1_{B'}/m(B'), B' the parent of B.
CellFunction eigenfunction(const BallTree& t, BallId b, BallId bp);

// L_C f(x) = -Σ_{B ∋ x} C(B)(P_B f - f(x)) (+ τ f(x) in tail mode; tail mode
// requires ∫ f dm = 0).
CellFunction apply(const ChoiceFunction& c, const CellFunction& f);

// Closed-form L_C(f_T) = λ(T) f_T - Σ_{x ∈ B, T ⊆ B} C(B) f_B, evaluated
// directly as a chain sum; independent oracle for apply() on f_T.
CellFunction apply_ft_closed_form(const ChoiceFunction& c, BallId t_ball);

// Dense matrix of the window operator on leaf values, row-major.
struct DenseOperator {
    std::size_t n = 0;
    std::vector<double> a;

    double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
};

// Brute-force oracle: matrix M with (M f)(leaf) = apply(c, f)(leaf). In
// mean_zero_tail mode: window part plus the rank-1 completion τ(I - P₀), which
// agrees with apply() on mean-zero inputs and sends constants to 0.
DenseOperator assemble_dense(const ChoiceFunction& c, std::size_t leaf_cap = 4096);

// Eigenvalues of the dense operator under the m-weighted inner product
// (symmetrized via D^{1/2} M D^{-1/2}), ascending.
std::vector<double> dense_eigenvalues(const DenseOperator& op, const BallTree& t);

struct SpectrumEntry {
    BallId ball;
    double lambda = 0;
    int multiplicity = 0; // l(B) - 1
};

struct SpectrumReport {
    std::vector<SpectrumEntry> entries;
    bool includes_zero = false;

    // Eigenvalue multiset expanded by multiplicity (plus 0 when present),
    // sorted ascending.
    std::vector<double> multiset() const;
    int multiplicity_sum() const;
};

SpectrumReport spectrum(const ChoiceFunction& c);

// CSV with columns lambda,multiplicity,ball_id,level (ascending by lambda).
std::string spectrum_csv(const SpectrumReport& rep, const BallTree& t);
// Text block with a distinct-eigenvalue histogram.
std::string spectrum_summary(const SpectrumReport& rep);

// l(B)-1 m-orthonormal functions spanning H_B, built by sequential
// orthonormalization of the f_{C,B} in child order.
std::vector<CellFunction> eigenbasis(const BallTree& t, BallId b);

// Groups values into clusters of absolute width `tol` and compares two
// multisets cluster-by-cluster; used for dense-oracle multiplicity matching.
bool multisets_match_clustered(const std::vector<double>& a, const std::vector<double>& b,
                               double cluster_tol, double value_rel_tol);

} // namespace hilap
