#include "wreathdiam/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <thread>

namespace wreathdiam {

using Code = CodedGroup::Code;

std::string to_string(GroupKind kind) { return kind == GroupKind::W ? "W" : "G"; }

GroupKind parse_group_kind(const std::string& s) {
    if (s == "W") return GroupKind::W;
    if (s == "G") return GroupKind::G;
    throw std::invalid_argument("group must be W or G, got '" + s + "'");
}

// ---------------------------------------------------------------------------
// CodedGroup

namespace {

constexpr std::size_t kMaxDigits = 32;
using Digits = std::array<std::uint32_t, kMaxDigits>;

}  // namespace

CodedGroup::CodedGroup(GroupParams params, GroupKind kind) : params_(params), kind_(kind) {
    params_.validate();
    dim_ = kind == GroupKind::W ? params.p : params.p - 1;
    std::uint64_t base = 1;
    for (std::uint32_t i = 0; i < dim_; ++i) {
        base *= params.q;
        if (base * params.p > kMaxGroupOrder) {
            throw GuardExceeded("group order exceeds the in-memory limit of " + std::to_string(kMaxGroupOrder));
        }
    }
    base_size_ = static_cast<std::uint32_t>(base);
    order_ = base_size_ * params.p;
    mask_p_ = params.q == 2 ? static_cast<std::uint32_t>((1ULL << params.p) - 1) : 0;
}

Code CodedGroup::multiply(Code a, Code b) const noexcept {
    if (params_.q != 2) return multiply_generic(a, b);
    const std::uint32_t p = params_.p;
    const std::uint32_t sa = a >> dim_;
    const std::uint32_t sb = b >> dim_;
    const std::uint32_t va = a & (base_size_ - 1);
    const std::uint32_t vb = b & (base_size_ - 1);
    std::uint32_t rot = sa == 0 ? vb : (((vb << sa) | (vb >> (p - sa))) & mask_p_);
    if (kind_ == GroupKind::G && (rot >> (p - 1)) & 1U) rot ^= mask_p_;
    std::uint32_t s = sa + sb;
    if (s >= p) s -= p;
    return (s << dim_) | (va ^ rot);
}

Code CodedGroup::inverse(Code a) const noexcept {
    if (params_.q != 2) return inverse_generic(a);
    const std::uint32_t p = params_.p;
    const std::uint32_t sa = a >> dim_;
    const std::uint32_t va = a & (base_size_ - 1);
    const std::uint32_t back = sa == 0 ? 0 : p - sa;
    std::uint32_t rot = back == 0 ? va : (((va << back) | (va >> (p - back))) & mask_p_);
    if (kind_ == GroupKind::G && (rot >> (p - 1)) & 1U) rot ^= mask_p_;
    return (back << dim_) | rot;
}

namespace {

void unpack(std::uint32_t v, std::uint32_t q, std::uint32_t n, Digits& out) {
    for (std::uint32_t j = 0; j < n; ++j) {
        out[j] = v % q;
        v /= q;
    }
}

std::uint32_t pack(const Digits& d, std::uint32_t q, std::uint32_t n) {
    std::uint32_t v = 0;
    for (std::uint32_t j = n; j-- > 0;) v = v * q + d[j];
    return v;
}

}  // namespace

Code CodedGroup::multiply_generic(Code a, Code b) const noexcept {
    const std::uint32_t p = params_.p;
    const std::uint32_t q = params_.q;
    const std::uint32_t sa = a / base_size_;
    const std::uint32_t sb = b / base_size_;
    Digits va{};
    Digits vb{};
    Digits rot{};
    unpack(a % base_size_, q, dim_, va);
    unpack(b % base_size_, q, dim_, vb);
    for (std::uint32_t j = 0; j < p; ++j) rot[(j + sa) % p] = vb[j];
    if (kind_ == GroupKind::G && rot[p - 1] != 0) {
        const std::uint32_t t = rot[p - 1];
        for (std::uint32_t j = 0; j + 1 < p; ++j) rot[j] = (rot[j] + q - t) % q;
    }
    for (std::uint32_t j = 0; j < dim_; ++j) va[j] = (va[j] + rot[j]) % q;
    return ((sa + sb) % p) * base_size_ + pack(va, q, dim_);
}

Code CodedGroup::inverse_generic(Code a) const noexcept {
    const std::uint32_t p = params_.p;
    const std::uint32_t q = params_.q;
    const std::uint32_t sa = a / base_size_;
    const std::uint32_t back = (p - sa) % p;
    Digits va{};
    Digits rot{};
    unpack(a % base_size_, q, dim_, va);
    for (std::uint32_t j = 0; j < p; ++j) rot[(j + back) % p] = (q - va[j]) % q;
    if (kind_ == GroupKind::G && rot[p - 1] != 0) {
        const std::uint32_t t = rot[p - 1];
        for (std::uint32_t j = 0; j + 1 < p; ++j) rot[j] = (rot[j] + q - t) % q;
    }
    return back * base_size_ + pack(rot, q, dim_);
}

Code CodedGroup::encode(const WreathElement& g) const {
    if (!(g.params() == params_)) throw std::invalid_argument("element parameters do not match the group");
    if (kind_ == GroupKind::G) return encode(quotient_map(g));
    Digits d{};
    for (std::uint32_t j = 0; j < dim_; ++j) d[j] = g.vec()[j];
    return g.shift() * base_size_ + pack(d, params_.q, dim_);
}

Code CodedGroup::encode(const QuotientElement& g) const {
    if (!(g.params() == params_)) throw std::invalid_argument("element parameters do not match the group");
    if (kind_ == GroupKind::W) return encode(lift(g));
    Digits d{};
    for (std::uint32_t j = 0; j < dim_; ++j) d[j] = g.poly().coeff(j);
    return g.shift() * base_size_ + pack(d, params_.q, dim_);
}

WreathElement CodedGroup::decode_w(Code a) const {
    if (kind_ == GroupKind::G) return lift(decode_g(a));
    Digits d{};
    unpack(a % base_size_, params_.q, dim_, d);
    return {params_, std::vector<Residue>(d.begin(), d.begin() + dim_), a / base_size_};
}

QuotientElement CodedGroup::decode_g(Code a) const {
    if (kind_ == GroupKind::W) return quotient_map(decode_w(a));
    Digits d{};
    unpack(a % base_size_, params_.q, dim_, d);
    return {params_, FqPoly(params_.q, std::vector<Residue>(d.begin(), d.begin() + dim_)), a / base_size_};
}

std::string CodedGroup::describe(Code a) const {
    return kind_ == GroupKind::W ? decode_w(a).to_string() : decode_g(a).to_string();
}

// ---------------------------------------------------------------------------
// Closures

namespace {

Subgroup closure_from(const CodedGroup& group, Subgroup h, std::span<const Code> gens, bool early_exit) {
    const std::size_t half = group.order() / 2;
    for (std::size_t i = 0; i < h.elements.size(); ++i) {
        const Code e = h.elements[i];
        for (const Code g : gens) {
            const Code x = group.multiply(e, g);
            if (h.member[x]) continue;
            h.member[x] = 1;
            h.elements.push_back(x);
            if (early_exit && h.elements.size() > half) {
                h.whole = true;
                return h;
            }
        }
    }
    h.whole = h.elements.size() == group.order();
    return h;
}

Subgroup trivial_subgroup(const CodedGroup& group) {
    Subgroup h;
    h.member.assign(group.order(), 0);
    h.member[CodedGroup::identity()] = 1;
    h.elements.push_back(CodedGroup::identity());
    return h;
}

}  // namespace

Subgroup subgroup_closure(const CodedGroup& group, std::span<const Code> gens) {
    return closure_from(group, trivial_subgroup(group), gens, false);
}

Subgroup extend_closure(const CodedGroup& group, const Subgroup& h, std::span<const Code> gens) {
    return closure_from(group, h, gens, true);
}

bool generates(const CodedGroup& group, std::span<const Code> gens) {
    return closure_from(group, trivial_subgroup(group), gens, true).whole;
}

std::vector<Code> make_irredundant(const CodedGroup& group, std::vector<Code> gens) {
    for (std::size_t i = 0; i < gens.size();) {
        std::vector<Code> rest(gens);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (generates(group, rest)) {
            gens = std::move(rest);
        } else {
            ++i;
        }
    }
    return gens;
}

// ---------------------------------------------------------------------------
// BFS

NotGeneratingSet::NotGeneratingSet(std::uint32_t reached, std::uint32_t order)
    : std::invalid_argument("generators reach only " + std::to_string(reached) + " of " + std::to_string(order) +
                            " elements"),
      reached_(reached) {}

DiameterResult bfs_diameter(const CodedGroup& group, std::span<const Code> gens) {
    std::vector<Code> steps;
    steps.reserve(2 * gens.size());
    for (const Code g : gens) {
        steps.push_back(g);
        steps.push_back(group.inverse(g));
    }
    std::vector<std::int32_t> dist(group.order(), -1);
    std::vector<Code> queue;
    queue.reserve(group.order());
    queue.push_back(CodedGroup::identity());
    dist[CodedGroup::identity()] = 0;
    DiameterResult out;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const Code e = queue[i];
        const std::int32_t d = dist[e];
        for (const Code s : steps) {
            const Code x = group.multiply(e, s);
            if (dist[x] >= 0) continue;
            dist[x] = d + 1;
            queue.push_back(x);
            if (static_cast<std::uint32_t>(d + 1) > out.diameter) {
                out.diameter = static_cast<std::uint32_t>(d + 1);
                out.eccentric = x;
            }
        }
    }
    out.group_order = group.order();
    out.reached = static_cast<std::uint32_t>(queue.size());
    out.generators.assign(gens.begin(), gens.end());
    if (out.reached != group.order()) throw NotGeneratingSet(out.reached, group.order());
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

class IrredundantWalker {
public:
    IrredundantWalker(const CodedGroup& group, const std::function<void(std::span<const Code>)>& emit)
        : group_(group), emit_(emit) {}

    void run_from(Code first) {
        set_.assign(1, first);
        const Subgroup h = extend_closure(group_, trivial_subgroup(group_), set_);
        if (h.whole) {
            emit_(set_);
        } else {
            descend(h, 0);
        }
    }

    void run(const std::function<bool(Code)>& first_filter) {
        const Subgroup trivial = trivial_subgroup(group_);
        for (Code x = 1; x < group_.order(); ++x) {
            if (first_filter && !first_filter(x)) continue;
            set_.assign(1, x);
            const Subgroup h = extend_closure(group_, trivial, set_);
            if (h.whole) {
                emit_(set_);  // cyclic group; cannot happen for W or G
            } else {
                descend(h, x + 1);
            }
        }
    }

private:
    void descend(const Subgroup& h, Code start) {
        // <H, x h'> = <H, x> for h' in H, so closures are cached per left coset x H.
        std::vector<std::int32_t> coset_id(group_.order(), -1);
        std::vector<Subgroup> closures;
        for (Code x = start; x < group_.order(); ++x) {
            if (h.contains(x)) continue;
            set_.push_back(x);
            if (coset_id[x] < 0) {
                closures.push_back(extend_closure(group_, h, set_));
                const auto id = static_cast<std::int32_t>(closures.size() - 1);
                for (const Code e : h.elements) coset_id[group_.multiply(x, e)] = id;
            }
            const Subgroup& k = closures[static_cast<std::size_t>(coset_id[x])];
            if (k.whole) {
                if (irredundant()) emit_(set_);
            } else {
                descend(k, x + 1);
            }
            set_.pop_back();
        }
    }

    // The last element is needed (the prefix does not generate); check the rest.
    bool irredundant() {
        std::vector<Code> rest;
        for (std::size_t i = 0; i + 1 < set_.size(); ++i) {
            rest.clear();
            for (std::size_t j = 0; j < set_.size(); ++j) {
                if (j != i) rest.push_back(set_[j]);
            }
            if (generates(group_, rest)) return false;
        }
        return true;
    }

    const CodedGroup& group_;
    const std::function<void(std::span<const Code>)>& emit_;
    std::vector<Code> set_;
};

unsigned worker_count(unsigned threads) {
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    return threads;
}

struct Best {
    std::uint32_t diameter = 0;
    std::vector<Code> witness;
    std::uint64_t examined = 0;
    std::size_t max_size = 0;

    void offer(std::uint32_t d, std::span<const Code> set) {
        ++examined;
        max_size = std::max(max_size, set.size());
        const bool better = witness.empty() || d > diameter ||
                            (d == diameter && std::lexicographical_compare(set.begin(), set.end(), witness.begin(),
                                                                           witness.end()));
        if (better) {
            diameter = d;
            witness.assign(set.begin(), set.end());
        }
    }

    void merge(const Best& other) {
        const auto examined_before = examined + other.examined;
        const auto size_before = std::max(max_size, other.max_size);
        if (!other.witness.empty()) {
            offer(other.diameter, other.witness);
        }
        examined = examined_before;
        max_size = size_before;
    }
};

template <class Work>
Best run_workers(unsigned threads, Work work) {
    threads = worker_count(threads);
    std::vector<Best> partial(threads);
    if (threads == 1) {
        work(0U, 1U, partial[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back([&, t] { work(t, threads, partial[t]); });
        for (auto& th : pool) th.join();
    }
    Best total;
    for (const auto& b : partial) total.merge(b);
    return total;
}

std::uint32_t bound_for(const CodedGroup& group) {
    const auto& params = group.params();
    if (params.q != 2) return 0;
    return group.kind() == GroupKind::W ? 20 * (params.p - 1) : 13 * (params.p - 1) / 2;
}

void check_exhaustive_guard(const CodedGroup& group) {
    if (group.order() > kMaxExhaustiveOrder) {
        throw GuardExceeded("exhaustive enumeration is limited to groups of order <= " +
                            std::to_string(kMaxExhaustiveOrder) + " (got " + std::to_string(group.order()) + ")");
    }
}

}  // namespace

void enumerate_irredundant(const CodedGroup& group, const std::function<void(std::span<const Code>)>& emit,
                           const std::function<bool(Code)>& first_filter) {
    check_exhaustive_guard(group);
    IrredundantWalker walker(group, emit);
    walker.run(first_filter);
}

namespace {

// Smallest member of each union-find class.
class Orbits {
public:
    explicit Orbits(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Code{0}); }

    Code find(Code a) {
        while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
        return a;
    }

    void unite(Code a, Code b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<Code> parent_;
};

}  // namespace

std::vector<Code> shifted_orbit_representatives(const CodedGroup& group) {
    check_exhaustive_guard(group);
    const auto& params = group.params();
    Orbits orbits(group.order());
    const Code c = group.encode(WreathElement::shift_generator(params));
    const Code e0 = group.encode(WreathElement::basis(params, 0));
    std::vector<PowerAutomorphism> powers;
    for (std::uint32_t m = 2; m < params.p; ++m) powers.emplace_back(params, m);
    for (Code a = 0; a < group.order(); ++a) {
        for (const Code g : {c, e0}) orbits.unite(a, group.multiply(group.multiply(group.inverse(g), a), g));
        // Lifts to W; every automorphism used here fixes the center, so it descends to G.
        const WreathElement w = group.decode_w(a);
        for (const auto& theta : powers) orbits.unite(a, group.encode(theta.apply(w)));
        for (Residue s = 2; s < params.q; ++s) {
            std::vector<Residue> v(w.vec().begin(), w.vec().end());
            for (auto& x : v) x = static_cast<Residue>((static_cast<std::uint64_t>(x) * s) % params.q);
            orbits.unite(a, group.encode(WreathElement(params, std::move(v), w.shift())));
        }
    }
    std::vector<Code> reps;
    for (Code a = 0; a < group.order(); ++a) {
        if (group.shift(a) != 0 && orbits.find(a) == a) reps.push_back(a);
    }
    // A class's smallest member may have shift 0 only if the class mixes shifts, which automorphisms never do.
    for (Code a = 0; a < group.order(); ++a) {
        if (group.shift(a) != 0 && group.shift(orbits.find(a)) == 0) {
            throw std::logic_error("automorphism orbit mixes zero and nonzero shifts");
        }
    }
    return reps;
}

void enumerate_irredundant_up_to_automorphism(const CodedGroup& group,
                                              const std::function<void(std::span<const Code>)>& emit,
                                              const std::function<bool(std::size_t)>& rep_filter) {
    const auto reps = shifted_orbit_representatives(group);
    IrredundantWalker walker(group, emit);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (rep_filter && !rep_filter(i)) continue;
        walker.run_from(reps[i]);
    }
}

SearchReport worst_diameter(const CodedGroup& group, const SearchMode& mode, unsigned threads) {
    Best best;
    if (mode.exhaustive) {
        check_exhaustive_guard(group);
        best = run_workers(threads, [&](unsigned t, unsigned n, Best& out) {
            enumerate_irredundant_up_to_automorphism(
                group,
                [&](std::span<const Code> set) {
                    std::vector<Code> sorted(set.begin(), set.end());
                    std::sort(sorted.begin(), sorted.end());
                    out.offer(bfs_diameter(group, sorted).diameter, sorted);
                },
                [&](std::size_t i) { return i % n == t; });
        });
    } else {
        std::mt19937_64 master(mode.seed);
        std::vector<std::uint64_t> seeds(mode.samples);
        for (auto& s : seeds) s = master();
        best = run_workers(threads, [&](unsigned t, unsigned n, Best& out) {
            for (std::size_t i = t; i < seeds.size(); i += n) {
                std::mt19937_64 rng(seeds[i]);
                const auto set = random_irredundant(group, rng);
                out.offer(bfs_diameter(group, set).diameter, set);
            }
        });
    }
    SearchReport report;
    report.worst_diameter = best.diameter;
    report.witness = std::move(best.witness);
    report.sets_examined = best.examined;
    report.exhaustive = mode.exhaustive;
    report.max_irredundant_size = best.max_size;
    report.bound = bound_for(group);
    report.within_bound = report.bound == 0 || report.worst_diameter <= report.bound;
    return report;
}

std::size_t max_irredundant_size(const CodedGroup& group) {
    std::size_t best = 0;
    enumerate_irredundant_up_to_automorphism(group,
                                             [&](std::span<const Code> set) { best = std::max(best, set.size()); });
    return best;
}

std::uint32_t cyclic_worst_diameter(std::uint32_t n) {
    if (n < 1 || n > 20) throw GuardExceeded("cyclic_worst_diameter supports 1 <= n <= 20");
    if (n == 1) return 0;
    std::uint32_t worst = 0;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        if (mask & 1U) continue;  // identity never helps
        std::vector<std::int32_t> dist(n, -1);
        std::vector<std::uint32_t> queue{0};
        dist[0] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const auto e = queue[i];
            for (std::uint32_t g = 1; g < n; ++g) {
                if (!((mask >> g) & 1U)) continue;
                for (const std::uint32_t x : {(e + g) % n, (e + n - g) % n}) {
                    if (dist[x] >= 0) continue;
                    dist[x] = dist[e] + 1;
                    queue.push_back(x);
                }
            }
        }
        if (queue.size() != n) continue;
        worst = std::max(worst, static_cast<std::uint32_t>(*std::max_element(dist.begin(), dist.end())));
    }
    return worst;
}

SchreierCheck schreier_bound_check(const GroupParams& params, unsigned threads) {
    const CodedGroup w(params, GroupKind::W);
    const CodedGroup g(params, GroupKind::G);
    check_exhaustive_guard(w);
    SchreierCheck out;
    out.params = params;
    out.diam_w = worst_diameter(w, SearchMode::exhaustive_mode(), threads).worst_diameter;
    out.diam_g = worst_diameter(g, SearchMode::exhaustive_mode(), threads).worst_diameter;
    out.diam_t = cyclic_worst_diameter(params.q);
    const std::uint64_t dg = out.diam_g;
    const std::uint64_t dt = out.diam_t;
    out.general_bound = 2 * dg * dt + dt + dg;
    out.center_bound = 3 * dg + 1;
    out.general_holds = out.diam_w <= out.general_bound;
    out.center_holds = dt == 1 && out.diam_w <= out.center_bound;
    return out;
}

}  // namespace wreathdiam
