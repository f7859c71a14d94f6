#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilap/error.hpp"

namespace hilap {

// Handle into a BallTree. Carries the issuing tree's tag so that ids from a
// different tree are rejected instead of silently indexing garbage.
struct BallId {
    static constexpr std::uint32_t npos = 0xffffffffu;

    std::uint32_t index = npos;
    std::uint32_t tree_tag = 0;

    bool valid() const { return index != npos; }
    friend bool operator==(const BallId& a, const BallId& b) {
        return a.index == b.index && a.tree_tag == b.tree_tag;
    }
    friend bool operator!=(const BallId& a, const BallId& b) { return !(a == b); }
};

// A point of the window: the leaf cell it lives in.
struct PointId {
    BallId leaf;
};

enum class LeafKind : std::uint8_t {
    internal,  // not a leaf
    cell,      // unresolved compact ball, positive measure
    singleton, // true point, diameter 0
};

// Construction recipes for the finite window of the ball lattice.
struct TreeSpec {
    enum class Kind { padic, cyclic_group, nat_dmax, binary_shape, explicit_tree };

    Kind kind = Kind::padic;
    // padic
    int p = 2;
    int k_min = 0;
    int k_max = 1;
    // cyclic_group: orders of the cyclic factors Z(p_1) ⊕ ... ⊕ Z(p_depth)
    std::vector<int> orders;
    // nat_dmax / binary_shape
    int n = 0;
    // explicit_tree: parallel arrays, parent of root = npos
    std::vector<std::uint32_t> parents;
    std::vector<double> diams;
    std::vector<double> measures;

    static TreeSpec padic(int p, int k_min, int k_max);
    static TreeSpec cyclic_group(std::vector<int> orders);
    static TreeSpec nat_dmax(int n);
    static TreeSpec binary_shape(int depth);
    static TreeSpec explicit_tree(std::vector<std::uint32_t> parents, std::vector<double> diams,
                                  std::vector<double> measures);

    // Compact CLI syntax: "padic:2:-2:2", "cyclic:2,3,4", "natdmax:6", "binary:12".
    static TreeSpec parse(const std::string& text);
    std::string to_string() const;
};

// Finite window of the hierarchical lattice of balls. Immutable once built;
// balls are stored in DFS preorder so the leaves under any ball form a
// contiguous range.
class BallTree {
public:
    std::size_t ball_count() const { return parent_.size(); }
    std::size_t leaf_count() const { return leaves_.size(); }
    std::size_t internal_count() const { return internal_.size(); }

    BallId root() const { return id(root_); }
    const std::vector<BallId>& leaves() const { return leaves_; }
    const std::vector<BallId>& internal_balls() const { return internal_; }

    bool is_root(BallId b) const { return check(b) == root_; }
    bool is_leaf(BallId b) const { return kind_[check(b)] != LeafKind::internal; }
    bool is_internal(BallId b) const { return kind_[check(b)] == LeafKind::internal; }
    bool is_singleton(BallId b) const { return kind_[check(b)] == LeafKind::singleton; }
    bool is_cell_leaf(BallId b) const { return kind_[check(b)] == LeafKind::cell; }

    BallId parent(BallId b) const;
    const std::vector<BallId>& children(BallId b) const { return children_[check(b)]; }
    std::size_t child_count(BallId b) const { return children_[check(b)].size(); }

    double diam(BallId b) const { return diam_[check(b)]; }
    double measure(BallId b) const { return measure_[check(b)]; }
    int level(BallId b) const { return level_[check(b)]; }
    int max_level() const { return max_level_; }

    // Position of a leaf in leaves() order; fails on internal balls.
    std::size_t leaf_index(BallId b) const;
    // Leaves under b occupy leaves()[leaf_begin(b) .. leaf_end(b)).
    std::size_t leaf_begin(BallId b) const { return leaf_begin_[check(b)]; }
    std::size_t leaf_end(BallId b) const { return leaf_end_[check(b)]; }

    bool contains(BallId outer, BallId inner) const;

    // D3: declared divergence of Whitney values along chains above the window.
    bool tail_divergence() const { return tail_divergence_; }
    void declare_tail_divergence(bool v) { tail_divergence_ = v; }

    BallId id(std::uint32_t index) const { return BallId{index, tag_}; }
    std::uint32_t check(BallId b) const;

private:
    friend BallTree build_tree(const TreeSpec& spec);
    friend class TreeBuilder;

    std::uint32_t tag_ = 0;
    std::uint32_t root_ = 0;
    std::vector<std::uint32_t> parent_;
    std::vector<std::vector<BallId>> children_;
    std::vector<double> diam_;
    std::vector<double> measure_;
    std::vector<int> level_;
    std::vector<LeafKind> kind_;
    std::vector<std::size_t> leaf_begin_;
    std::vector<std::size_t> leaf_end_;
    std::vector<BallId> leaves_;
    std::vector<BallId> internal_;
    int max_level_ = 0;
    bool tail_divergence_ = false;
};

BallTree build_tree(const TreeSpec& spec);

// Lowest common ancestor: the smallest ball containing both a and b.
BallId meet(const BallTree& t, BallId a, BallId b);

// Positive values on non-singleton balls, strictly monotone along inclusion,
// zero exactly on singleton leaves. Induces the ultrametric d(x,y) = w(x∧y).
class WhitneyMap {
public:
    WhitneyMap(const BallTree& t, std::vector<double> values);

    // w(B) = diam(B); on a proper ultrametric window the diameter function is
    // itself a Whitney map.
    static WhitneyMap diam_map(const BallTree& t);

    double at(BallId b) const { return values_[tree_->check(b)]; }
    const std::vector<double>& values() const { return values_; }
    const BallTree& tree() const { return *tree_; }

private:
    const BallTree* tree_;
    std::vector<double> values_;
};

double distance(const BallTree& t, const WhitneyMap& w, PointId x, PointId y);

// w(B) = 1/lam(B) on non-singleton balls; lam must be strictly decreasing
// along inclusion (A ⊊ B implies lam(A) > lam(B)). Entries at singleton
// leaves are ignored.
WhitneyMap whitney_from_lambda(const BallTree& t, const std::vector<double>& lam);

// Distance values realized in the window: {w(B) : B internal} ∪ {0}, sorted
// ascending, deduplicated at absolute tolerance 1e-12.
std::vector<double> range_of_metric(const BallTree& t, const WhitneyMap& w);

// Maximal antichain of balls; members' measures sum to measure(root).
struct Partition {
    std::vector<BallId> members;
};

// Throws unless members form a maximal antichain covering the window.
void validate_partition(const BallTree& t, const Partition& part);

// All balls at the given level plus all leaves above it.
Partition level_partition(const BallTree& t, int level);

// Line-oriented text format: header "#hilap-tree v1", one ball per line with
// fields `id parent level diam measure flags` and an optional trailing `w`.
std::string serialize_tree(const BallTree& t, const WhitneyMap* w = nullptr);
BallTree parse_tree(const std::string& text, std::vector<double>* w_values = nullptr);

} // namespace hilap
