#include "hilap/tree.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hilap {

namespace {

constexpr std::uint32_t kNpos = BallId::npos;
constexpr double kTol = 1e-12;

std::uint32_t next_tree_tag() {
    static std::atomic<std::uint32_t> counter{1};
    return counter.fetch_add(1);
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

// ---------------------------------------------------------------------------
// TreeSpec

TreeSpec TreeSpec::padic(int p, int k_min, int k_max) {
    TreeSpec s;
    s.kind = Kind::padic;
    s.p = p;
    s.k_min = k_min;
    s.k_max = k_max;
    return s;
}

TreeSpec TreeSpec::cyclic_group(std::vector<int> orders) {
    TreeSpec s;
    s.kind = Kind::cyclic_group;
    s.orders = std::move(orders);
    return s;
}

TreeSpec TreeSpec::nat_dmax(int n) {
    TreeSpec s;
    s.kind = Kind::nat_dmax;
    s.n = n;
    return s;
}

TreeSpec TreeSpec::binary_shape(int depth) {
    TreeSpec s;
    s.kind = Kind::binary_shape;
    s.n = depth;
    return s;
}

TreeSpec TreeSpec::explicit_tree(std::vector<std::uint32_t> parents, std::vector<double> diams,
                                 std::vector<double> measures) {
    TreeSpec s;
    s.kind = Kind::explicit_tree;
    s.parents = std::move(parents);
    s.diams = std::move(diams);
    s.measures = std::move(measures);
    return s;
}

TreeSpec TreeSpec::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);

    auto to_int = [&](const std::string& s) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos != s.size()) fail(errc::config_parse, "bad integer '" + s + "' in tree spec");
            return v;
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail(errc::config_parse, "bad integer '" + s + "' in tree spec");
        }
    };

    const std::string& head = parts[0];
    if (head == "padic") {
        if (parts.size() != 4) fail(errc::config_parse, "padic spec needs padic:p:kmin:kmax");
        return padic(to_int(parts[1]), to_int(parts[2]), to_int(parts[3]));
    }
    if (head == "cyclic") {
        if (parts.size() != 2) fail(errc::config_parse, "cyclic spec needs cyclic:p1,p2,...");
        std::vector<int> orders;
        std::string item;
        std::istringstream in(parts[1]);
        while (std::getline(in, item, ',')) orders.push_back(to_int(item));
        return cyclic_group(std::move(orders));
    }
    if (head == "natdmax") {
        if (parts.size() != 2) fail(errc::config_parse, "natdmax spec needs natdmax:n");
        return nat_dmax(to_int(parts[1]));
    }
    if (head == "binary") {
        if (parts.size() != 2) fail(errc::config_parse, "binary spec needs binary:depth");
        return binary_shape(to_int(parts[1]));
    }
    fail(errc::config_parse, "unknown tree spec '" + text + "'");
}

std::string TreeSpec::to_string() const {
    switch (kind) {
        case Kind::padic:
            return "padic:" + std::to_string(p) + ":" + std::to_string(k_min) + ":" +
                   std::to_string(k_max);
        case Kind::cyclic_group: {
            std::string s = "cyclic:";
            for (std::size_t i = 0; i < orders.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(orders[i]);
            }
            return s;
        }
        case Kind::nat_dmax:
            return "natdmax:" + std::to_string(n);
        case Kind::binary_shape:
            return "binary:" + std::to_string(n);
        case Kind::explicit_tree:
            return "explicit[" + std::to_string(parents.size()) + " balls]";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Builder: raw arrays -> validated canonical BallTree

class TreeBuilder {
public:
    std::vector<std::uint32_t> parents; // npos for root
    std::vector<double> diams;
    std::vector<double> measures;
    bool tail_divergence = false;

    std::uint32_t add(std::uint32_t parent, double diam, double measure) {
        parents.push_back(parent);
        diams.push_back(diam);
        measures.push_back(measure);
        return static_cast<std::uint32_t>(parents.size() - 1);
    }

    BallTree finish() {
        const std::size_t n = parents.size();
        if (n < 3) fail(errc::single_child_ball, "window needs a root with at least two leaves");

        std::uint32_t root = kNpos;
        std::vector<std::vector<std::uint32_t>> kids(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (parents[i] == kNpos) {
                if (root != kNpos) fail(errc::validation, "two roots in tree input");
                root = static_cast<std::uint32_t>(i);
            } else {
                if (parents[i] >= n) fail(errc::validation, "parent index out of range");
                kids[parents[i]].push_back(static_cast<std::uint32_t>(i));
            }
        }
        if (root == kNpos) fail(errc::validation, "tree input has no root");

        // Measure additivity on the raw input, before any collapsing.
        for (std::size_t i = 0; i < n; ++i) {
            if (kids[i].empty()) continue;
            double sum = 0;
            for (auto c : kids[i]) sum += measures[c];
            if (std::abs(sum - measures[i]) > kTol * std::max(1.0, std::abs(measures[i])))
                fail(errc::non_additive_measure,
                     "ball " + std::to_string(i) + ": children sum to " + fmt_double(sum) +
                         ", ball has " + fmt_double(measures[i]));
        }

        // D2: splice out single-child balls (merge into the successor).
        std::vector<bool> dead(n, false);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (dead[i] || kids[i].size() != 1) continue;
                std::uint32_t child = kids[i][0];
                dead[i] = true;
                changed = true;
                std::uint32_t up = parents[i];
                parents[child] = up;
                if (up == kNpos) {
                    root = child;
                } else {
                    for (auto& c : kids[up])
                        if (c == static_cast<std::uint32_t>(i)) c = child;
                }
                kids[i].clear();
            }
        }
        if (kids[root].empty())
            fail(errc::single_child_ball, "window collapses to a single ball");

        // Renumber in DFS preorder; leaves become contiguous per subtree.
        BallTree t;
        t.tag_ = next_tree_tag();
        t.tail_divergence_ = tail_divergence;

        std::vector<std::uint32_t> order;
        order.reserve(n);
        std::vector<std::uint32_t> stack = {root};
        while (!stack.empty()) {
            std::uint32_t b = stack.back();
            stack.pop_back();
            order.push_back(b);
            for (auto it = kids[b].rbegin(); it != kids[b].rend(); ++it) stack.push_back(*it);
        }

        std::vector<std::uint32_t> new_index(n, kNpos);
        for (std::size_t i = 0; i < order.size(); ++i) new_index[order[i]] = static_cast<std::uint32_t>(i);

        const std::size_t m = order.size();
        t.parent_.resize(m);
        t.children_.resize(m);
        t.diam_.resize(m);
        t.measure_.resize(m);
        t.level_.resize(m);
        t.kind_.resize(m);
        t.leaf_begin_.resize(m);
        t.leaf_end_.resize(m);
        t.root_ = 0;

        for (std::size_t i = 0; i < m; ++i) {
            std::uint32_t old = order[i];
            t.parent_[i] = parents[old] == kNpos ? kNpos : new_index[parents[old]];
            t.diam_[i] = diams[old];
            t.measure_[i] = measures[old];
            t.level_[i] = t.parent_[i] == kNpos ? 0 : t.level_[t.parent_[i]] + 1;
            t.max_level_ = std::max(t.max_level_, t.level_[i]);
            if (kids[old].empty()) {
                t.kind_[i] = diams[old] == 0.0 ? LeafKind::singleton : LeafKind::cell;
            } else {
                t.kind_[i] = LeafKind::internal;
            }
            for (auto c : kids[old]) t.children_[i].push_back(BallId{new_index[c], t.tag_});
        }

        // Validate geometry on the canonical form.
        for (std::size_t i = 0; i < m; ++i) {
            std::uint32_t up = t.parent_[i];
            if (up != kNpos && !(t.diam_[i] < t.diam_[up]))
                fail(errc::non_monotone_diameter,
                     "diam(" + std::to_string(i) + ") = " + fmt_double(t.diam_[i]) +
                         " not below parent's " + fmt_double(t.diam_[up]));
            if (t.kind_[i] == LeafKind::internal && !(t.measure_[i] > 0))
                fail(errc::validation, "internal ball " + std::to_string(i) + " has measure 0");
            if (t.kind_[i] == LeafKind::cell && !(t.measure_[i] > 0))
                fail(errc::validation, "cell leaf " + std::to_string(i) + " has measure 0");
            if (t.measure_[i] < 0) fail(errc::validation, "negative measure");
            if (t.diam_[i] < 0) fail(errc::validation, "negative diameter");
        }

        // Leaf ranges in DFS order.
        for (std::size_t i = m; i-- > 0;) {
            if (t.kind_[i] != LeafKind::internal) {
                t.leaf_begin_[i] = 0; // filled below once leaf order is known
            }
        }
        std::size_t leaf_counter = 0;
        // DFS preorder means a subtree is the index interval [i, end); compute
        // leaf ranges with a second pass using a stack of open subtrees.
        std::vector<std::size_t> first_leaf(m, 0), last_leaf(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            if (t.kind_[i] != LeafKind::internal) {
                t.leaves_.push_back(BallId{static_cast<std::uint32_t>(i), t.tag_});
                first_leaf[i] = leaf_counter;
                last_leaf[i] = leaf_counter + 1;
                ++leaf_counter;
            } else {
                t.internal_.push_back(BallId{static_cast<std::uint32_t>(i), t.tag_});
            }
        }
        for (std::size_t i = m; i-- > 0;) {
            if (t.kind_[i] == LeafKind::internal) {
                first_leaf[i] = first_leaf[t.children_[i].front().index];
                last_leaf[i] = last_leaf[t.children_[i].back().index];
            }
            t.leaf_begin_[i] = first_leaf[i];
            t.leaf_end_[i] = last_leaf[i];
        }
        return t;
    }
};

// ---------------------------------------------------------------------------
// Named builders

namespace {

BallTree build_padic(int p, int k_min, int k_max) {
    if (p < 2) fail(errc::validation, "padic window needs p >= 2");
    if (!(k_min < k_max)) fail(errc::validation, "padic window needs k_min < k_max");
    TreeBuilder b;
    // level k balls have diam = measure = p^-k; the root sits at k_min.
    std::vector<std::uint32_t> frontier;
    frontier.push_back(b.add(kNpos, std::pow(double(p), -k_min), std::pow(double(p), -k_min)));
    for (int k = k_min + 1; k <= k_max; ++k) {
        double size = std::pow(double(p), -k);
        std::vector<std::uint32_t> next;
        for (auto f : frontier)
            for (int c = 0; c < p; ++c) next.push_back(b.add(f, size, size));
        frontier.swap(next);
    }
    b.tail_divergence = true;
    return b.finish();
}

BallTree build_cyclic(const std::vector<int>& orders) {
    if (orders.empty()) fail(errc::validation, "cyclic group window needs at least one factor");
    for (int p : orders)
        if (p < 2) fail(errc::validation, "cyclic factors must be >= 2");
    TreeBuilder b;
    // Root = G_K, K = orders.size(); a G_n-coset has diameter n and |G_n|
    // elements in counting measure; singletons sit at the bottom.
    const int K = static_cast<int>(orders.size());
    std::vector<double> group_size(K + 1, 1.0);
    for (int i = 1; i <= K; ++i) group_size[i] = group_size[i - 1] * orders[i - 1];

    std::vector<std::uint32_t> frontier;
    frontier.push_back(b.add(kNpos, double(K), group_size[K]));
    for (int n = K - 1; n >= 0; --n) {
        std::vector<std::uint32_t> next;
        double diam = n == 0 ? 0.0 : double(n);
        for (auto f : frontier)
            for (int c = 0; c < orders[n]; ++c) next.push_back(b.add(f, diam, group_size[n]));
        frontier.swap(next);
    }
    b.tail_divergence = true;
    return b.finish();
}

BallTree build_nat_dmax(int n) {
    if (n < 2) fail(errc::validation, "natdmax window needs n >= 2");
    TreeBuilder b;
    // Balls {1..k} chained, singletons {1}..{n} hanging off; counting measure.
    std::uint32_t chain = b.add(kNpos, double(n), double(n)); // {1..n}
    for (int k = n; k >= 2; --k) {
        b.add(chain, 0.0, 1.0); // {k}
        if (k > 2) {
            chain = b.add(chain, double(k - 1), double(k - 1)); // {1..k-1}
        } else {
            b.add(chain, 0.0, 1.0); // {1}
        }
    }
    b.tail_divergence = true;
    return b.finish();
}

BallTree build_binary_shape(int depth) {
    if (depth < 1) fail(errc::validation, "binary shape needs depth >= 1");
    if (depth > 20) fail(errc::window_too_large, "binary shape deeper than 20 levels");
    TreeBuilder b;
    // Complete binary tree; discrete window: singleton leaves of measure 1,
    // internal diam 2^(depth - level).
    std::vector<std::uint32_t> frontier;
    double top = std::ldexp(1.0, depth);
    frontier.push_back(b.add(kNpos, top, std::ldexp(1.0, depth)));
    for (int lvl = 1; lvl <= depth; ++lvl) {
        std::vector<std::uint32_t> next;
        bool leaf = lvl == depth;
        double diam = leaf ? 0.0 : std::ldexp(1.0, depth - lvl);
        double meas = std::ldexp(1.0, depth - lvl);
        for (auto f : frontier) {
            next.push_back(b.add(f, diam, meas));
            next.push_back(b.add(f, diam, meas));
        }
        frontier.swap(next);
    }
    b.tail_divergence = true;
    return b.finish();
}

} // namespace

BallTree build_tree(const TreeSpec& spec) {
    switch (spec.kind) {
        case TreeSpec::Kind::padic:
            return build_padic(spec.p, spec.k_min, spec.k_max);
        case TreeSpec::Kind::cyclic_group:
            return build_cyclic(spec.orders);
        case TreeSpec::Kind::nat_dmax:
            return build_nat_dmax(spec.n);
        case TreeSpec::Kind::binary_shape:
            return build_binary_shape(spec.n);
        case TreeSpec::Kind::explicit_tree: {
            if (spec.parents.size() != spec.diams.size() ||
                spec.parents.size() != spec.measures.size())
                fail(errc::validation, "explicit tree arrays must have equal length");
            TreeBuilder b;
            b.parents = spec.parents;
            b.diams = spec.diams;
            b.measures = spec.measures;
            return b.finish();
        }
    }
    fail(errc::validation, "unreachable tree spec kind");
}

// ---------------------------------------------------------------------------
// BallTree accessors

std::uint32_t BallTree::check(BallId b) const {
    if (b.tree_tag != tag_ || b.index >= parent_.size())
        fail(errc::foreign_ball_id,
             "ball id " + std::to_string(b.index) + " does not belong to this tree");
    return b.index;
}

BallId BallTree::parent(BallId b) const {
    std::uint32_t i = check(b);
    if (parent_[i] == kNpos) fail(errc::validation, "root has no parent");
    return BallId{parent_[i], tag_};
}

std::size_t BallTree::leaf_index(BallId b) const {
    std::uint32_t i = check(b);
    if (kind_[i] == LeafKind::internal) fail(errc::validation, "ball is not a leaf");
    return leaf_begin_[i];
}

bool BallTree::contains(BallId outer, BallId inner) const {
    std::uint32_t o = check(outer);
    std::uint32_t i = check(inner);
    while (true) {
        if (i == o) return true;
        if (parent_[i] == kNpos) return false;
        i = parent_[i];
    }
}

BallId meet(const BallTree& t, BallId a, BallId b) {
    std::uint32_t x = t.check(a);
    std::uint32_t y = t.check(b);
    while (x != y) {
        if (t.level(t.id(x)) >= t.level(t.id(y)))
            x = t.parent(t.id(x)).index;
        else
            y = t.parent(t.id(y)).index;
    }
    return t.id(x);
}

// ---------------------------------------------------------------------------
// WhitneyMap

WhitneyMap::WhitneyMap(const BallTree& t, std::vector<double> values)
    : tree_(&t), values_(std::move(values)) {
    if (values_.size() != t.ball_count())
        fail(errc::validation, "Whitney map needs one value per ball");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        BallId b = t.id(static_cast<std::uint32_t>(i));
        if (t.is_singleton(b)) {
            if (values_[i] != 0.0)
                fail(errc::validation, "Whitney value must be 0 exactly on singletons");
        } else if (!(values_[i] > 0.0)) {
            fail(errc::validation, "Whitney value must be positive on non-singleton balls");
        }
        if (!t.is_root(b)) {
            double up = values_[t.parent(b).index];
            if (!(values_[i] < up))
                fail(errc::monotonicity_failure,
                     "Whitney value " + fmt_double(values_[i]) + " at ball " + std::to_string(i) +
                         " not below parent's " + fmt_double(up));
        }
    }
}

WhitneyMap WhitneyMap::diam_map(const BallTree& t) {
    std::vector<double> v(t.ball_count());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = t.diam(t.id(static_cast<std::uint32_t>(i)));
    return WhitneyMap(t, std::move(v));
}

double distance(const BallTree& t, const WhitneyMap& w, PointId x, PointId y) {
    if (!t.is_leaf(x.leaf) || !t.is_leaf(y.leaf)) fail(errc::validation, "points must be leaves");
    if (x.leaf == y.leaf) return 0.0;
    return w.at(meet(t, x.leaf, y.leaf));
}

WhitneyMap whitney_from_lambda(const BallTree& t, const std::vector<double>& lam) {
    if (lam.size() != t.ball_count())
        fail(errc::validation, "lambda map needs one value per ball");
    std::vector<double> v(lam.size(), 0.0);
    for (std::size_t i = 0; i < lam.size(); ++i) {
        BallId b = t.id(static_cast<std::uint32_t>(i));
        if (t.is_singleton(b)) continue;
        if (!(lam[i] > 0)) fail(errc::non_monotone_lambda, "lambda must be positive");
        if (!t.is_root(b)) {
            BallId up = t.parent(b);
            if (!(lam[i] > lam[up.index]))
                fail(errc::non_monotone_lambda,
                     "lambda must strictly decrease upward (ball " + std::to_string(i) + ")");
        }
        v[i] = 1.0 / lam[i];
    }
    return WhitneyMap(t, std::move(v));
}

std::vector<double> range_of_metric(const BallTree& t, const WhitneyMap& w) {
    std::vector<double> vals;
    vals.push_back(0.0);
    for (BallId b : t.internal_balls()) vals.push_back(w.at(b));
    std::sort(vals.begin(), vals.end());
    std::vector<double> out;
    for (double v : vals)
        if (out.empty() || v - out.back() > kTol) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------------------
// Partitions

void validate_partition(const BallTree& t, const Partition& part) {
    if (part.members.empty()) fail(errc::validation, "empty partition");
    std::vector<bool> covered(t.leaf_count(), false);
    double mass = 0;
    for (BallId b : part.members) {
        for (std::size_t i = t.leaf_begin(b); i < t.leaf_end(b); ++i) {
            if (covered[i]) fail(errc::validation, "partition members overlap");
            covered[i] = true;
        }
        mass += t.measure(b);
    }
    for (bool c : covered)
        if (!c) fail(errc::validation, "partition does not cover the window");
    if (std::abs(mass - t.measure(t.root())) > kTol * std::max(1.0, t.measure(t.root())))
        fail(errc::non_additive_measure, "partition measures do not sum to measure(root)");
}

Partition level_partition(const BallTree& t, int level) {
    if (level < 0 || level > t.max_level())
        fail(errc::level_out_of_range, "level " + std::to_string(level) + " not in window");
    Partition part;
    for (std::size_t i = 0; i < t.ball_count(); ++i) {
        BallId b = t.id(static_cast<std::uint32_t>(i));
        if (t.level(b) == level || (t.level(b) < level && t.is_leaf(b))) part.members.push_back(b);
    }
    validate_partition(t, part);
    return part;
}

// ---------------------------------------------------------------------------
// Serialization

std::string serialize_tree(const BallTree& t, const WhitneyMap* w) {
    std::string out = "#hilap-tree v1\n";
    out += "# id parent level diam measure flags";
    if (w) out += " w";
    out += "\n";
    out += "# tail_divergence ";
    out += t.tail_divergence() ? "1" : "0";
    out += "\n";
    for (std::size_t i = 0; i < t.ball_count(); ++i) {
        BallId b = t.id(static_cast<uint32_t>(i));
        out += std::to_string(i);
        out += ' ';
        out += t.is_root(b) ? "-" : std::to_string(t.parent(b).index);
        out += ' ';
        out += std::to_string(t.level(b));
        out += ' ';
        out += fmt_double(t.diam(b));
        out += ' ';
        out += fmt_double(t.measure(b));
        out += ' ';
        out += t.is_internal(b) ? "internal" : (t.is_cell_leaf(b) ? "cell" : "singleton");
        if (w) {
            out += ' ';
            out += fmt_double(w->at(b));
        }
        out += '\n';
    }
    return out;
}

BallTree parse_tree(const std::string& text, std::vector<double>* w_values) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "#hilap-tree v1")
        fail(errc::config_parse, "missing #hilap-tree v1 header");

    TreeBuilder b;
    std::vector<double> ws;
    std::vector<std::string> kinds;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream cl(line);
            std::string hash, key, val;
            cl >> hash >> key >> val;
            if (key == "tail_divergence") b.tail_divergence = val == "1";
            continue;
        }
        std::istringstream ls(line);
        std::string id_s, parent_s, flags;
        int level;
        double diam, measure;
        if (!(ls >> id_s >> parent_s >> level >> diam >> measure >> flags))
            fail(errc::config_parse, "bad tree line: " + line);
        std::uint32_t parent = parent_s == "-" ? kNpos : static_cast<std::uint32_t>(std::stoul(parent_s));
        if (std::stoul(id_s) != b.parents.size())
            fail(errc::config_parse, "tree lines must be numbered consecutively from 0");
        b.add(parent, diam, measure);
        kinds.push_back(flags);
        double wv;
        if (ls >> wv) ws.push_back(wv);
    }
    BallTree t = b.finish();
    if (w_values) {
        if (ws.size() == t.ball_count())
            *w_values = ws;
        else
            w_values->clear();
    }
    return t;
}

// ---------------------------------------------------------------------------

const char* errc_name(errc code) {
    switch (code) {
        case errc::non_monotone_diameter: return "NonMonotoneDiameter";
        case errc::non_additive_measure: return "NonAdditiveMeasure";
        case errc::single_child_ball: return "SingleChildBall";
        case errc::foreign_ball_id: return "ForeignBallId";
        case errc::level_out_of_range: return "LevelOutOfRange";
        case errc::non_monotone_lambda: return "NonMonotoneLambda";
        case errc::zero_measure_ball: return "ZeroMeasureBall";
        case errc::no_nondegenerate_member: return "NoNondegenerateMember";
        case errc::insufficient_values: return "InsufficientValues";
        case errc::no_small_values: return "NoSmallValues";
        case errc::empty_bin: return "EmptyBin";
        case errc::monotonicity_failure: return "MonotonicityFailure";
        case errc::insufficient_balls: return "InsufficientBalls";
        case errc::invalid_target_set: return "InvalidTargetSet";
        case errc::non_monotone_whitney: return "NonMonotoneWhitney";
        case errc::not_padic_tree: return "NotPadicTree";
        case errc::leaf_has_no_lambda: return "LeafHasNoLambda";
        case errc::not_parent_child: return "NotParentChild";
        case errc::non_zero_mean_in_tail_mode: return "NonZeroMeanInTailMode";
        case errc::window_too_large: return "WindowTooLarge";
        case errc::divergent_tail: return "DivergentTail";
        case errc::wrong_parameters: return "WrongParameters";
        case errc::not_enough_balls: return "NotEnoughBalls";
        case errc::window_too_shallow: return "WindowTooShallow";
        case errc::degenerate_bernoulli: return "DegenerateBernoulli";
        case errc::config_parse: return "ConfigParse";
        case errc::validation: return "Validation";
        case errc::io: return "IO";
        case errc::numeric_tolerance: return "NumericTolerance";
    }
    return "UnknownError";
}

} // namespace hilap
