#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wreathdiam/algebra.hpp"
#include "wreathdiam/wreath.hpp"

// Brute-force ground truth for the word-synthesis code. Nothing in here uses
// the module structure: generation is decided by closure and diameters by BFS.

namespace wreathdiam {

enum class GroupKind { W, G };

std::string to_string(GroupKind kind);
/// "W" or "G"; throws std::invalid_argument otherwise.
GroupKind parse_group_kind(const std::string& s);

class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest group held in memory (|W_13| = 106496 fits comfortably).
inline constexpr std::uint64_t kMaxGroupOrder = 1ULL << 22;
/// Largest group for which irredundant generating sets are enumerated.
inline constexpr std::uint64_t kMaxExhaustiveOrder = 1024;

/// W or G with elements interned as integers:
///
///     code = shift * q^n + sum_j v_j q^j      n = p (W) or p - 1 (G)
///
/// For G the U-part is the reduced polynomial of degree < p - 1.
class CodedGroup {
public:
    using Code = std::uint32_t;

    /// Throws GuardExceeded when the group order exceeds kMaxGroupOrder.
    CodedGroup(GroupParams params, GroupKind kind);

    [[nodiscard]] const GroupParams& params() const noexcept { return params_; }
    [[nodiscard]] GroupKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::uint32_t order() const noexcept { return order_; }
    [[nodiscard]] static constexpr Code identity() noexcept { return 0; }
    [[nodiscard]] std::uint32_t shift(Code a) const noexcept { return a / base_size_; }

    [[nodiscard]] Code multiply(Code a, Code b) const noexcept;
    [[nodiscard]] Code inverse(Code a) const noexcept;

    [[nodiscard]] Code encode(const WreathElement& g) const;
    [[nodiscard]] Code encode(const QuotientElement& g) const;
    [[nodiscard]] WreathElement decode_w(Code a) const;
    [[nodiscard]] QuotientElement decode_g(Code a) const;
    /// Element text, "(1,0,1)@2" for W and "[x+1]@2" for G.
    [[nodiscard]] std::string describe(Code a) const;

private:
    [[nodiscard]] Code multiply_generic(Code a, Code b) const noexcept;
    [[nodiscard]] Code inverse_generic(Code a) const noexcept;

    GroupParams params_;
    GroupKind kind_;
    std::uint32_t dim_;
    std::uint32_t base_size_;  // q^dim
    std::uint32_t order_;
    std::uint32_t mask_p_;     // q = 2 only: p low bits set
};

/// Members of <gens>, by right multiplication from the identity.
struct Subgroup {
    std::vector<CodedGroup::Code> elements;
    std::vector<std::uint8_t> member;
    /// Set when the closure is known to be the whole group; `elements` may
    /// then be incomplete.
    bool whole = false;

    [[nodiscard]] std::size_t size() const noexcept { return elements.size(); }
    [[nodiscard]] bool contains(CodedGroup::Code a) const noexcept { return member[a] != 0; }
};

Subgroup subgroup_closure(const CodedGroup& group, std::span<const CodedGroup::Code> gens);
/// <H, gens> where H is closed and `gens` contains a generating set of H. Stops as soon as more than half the group is
/// reached (a proper subgroup has index >= 2) and marks the result whole.
Subgroup extend_closure(const CodedGroup& group, const Subgroup& h, std::span<const CodedGroup::Code> gens);
bool generates(const CodedGroup& group, std::span<const CodedGroup::Code> gens);

struct DiameterResult {
    std::uint32_t diameter = 0;
    CodedGroup::Code eccentric = 0;  ///< first element found at maximal distance
    std::uint32_t group_order = 0;
    std::uint32_t reached = 0;
    std::vector<CodedGroup::Code> generators;
};

class NotGeneratingSet : public std::invalid_argument {
public:
    NotGeneratingSet(std::uint32_t reached, std::uint32_t order);
    [[nodiscard]] std::uint32_t reached() const noexcept { return reached_; }

private:
    std::uint32_t reached_;
};

/// Eccentricity of the identity in the undirected Cayley graph. Cayley graphs
/// are vertex transitive, so this is the diameter. Throws NotGeneratingSet.
DiameterResult bfs_diameter(const CodedGroup& group, std::span<const CodedGroup::Code> gens);

/// Calls `emit` with every irredundant generating set, each once, as an
/// increasing code list. Sets are built in increasing code order and a code
/// is only appended when it lies outside the closure of the current prefix;
/// every irredundant set passes this filter in its sorted order.
/// `first_filter(code)` restricts the first element (used to split work).
/// Throws GuardExceeded above kMaxExhaustiveOrder.
void enumerate_irredundant(const CodedGroup& group,
                           const std::function<void(std::span<const CodedGroup::Code>)>& emit,
                           const std::function<bool(CodedGroup::Code)>& first_filter = {});

/// Smallest code of each orbit of elements with nonzero shift under the
/// automorphisms generated by inner automorphisms, the power maps theta_m and
/// scalar multiplication of the U-part by units of F_q. Every generating set
/// has a member with nonzero shift, so every generating set is carried by an
/// automorphism onto one containing a representative.
std::vector<CodedGroup::Code> shifted_orbit_representatives(const CodedGroup& group);

/// Calls `emit` with every irredundant generating set containing one of the
/// shifted orbit representatives, representative first and the rest in
/// increasing order. Up to automorphism this covers every irredundant
/// generating set; a set containing two representatives is emitted twice.
/// `rep_filter(index)` restricts the representatives (used to split work).
/// Throws GuardExceeded above kMaxExhaustiveOrder.
void enumerate_irredundant_up_to_automorphism(
    const CodedGroup& group, const std::function<void(std::span<const CodedGroup::Code>)>& emit,
    const std::function<bool(std::size_t)>& rep_filter = {});

/// Drops redundant members in order until the set is irredundant.
std::vector<CodedGroup::Code> make_irredundant(const CodedGroup& group, std::vector<CodedGroup::Code> gens);

/// A random irredundant generating set: random elements outside the current
/// closure until the group is generated, then make_irredundant, then sorted.
template <class Rng>
std::vector<CodedGroup::Code> random_irredundant(const CodedGroup& group, Rng& rng);

/// Random generating set of `size` elements (retried until generating).
template <class Rng>
std::vector<CodedGroup::Code> random_generating(const CodedGroup& group, std::size_t size, Rng& rng);

struct SearchMode {
    bool exhaustive = true;
    std::size_t samples = 0;
    std::uint64_t seed = 0;

    static SearchMode exhaustive_mode() { return {true, 0, 0}; }
    static SearchMode sampled(std::size_t n, std::uint64_t seed) { return {false, n, seed}; }
};

struct SearchReport {
    std::uint32_t worst_diameter = 0;
    std::vector<CodedGroup::Code> witness;  ///< lexicographically smallest set attaining the worst diameter
    std::uint64_t sets_examined = 0;
    bool exhaustive = false;
    std::size_t max_irredundant_size = 0;
    std::uint32_t bound = 0;  ///< 20(p-1) for W, 13(p-1)/2 for G (q = 2 values)
    bool within_bound = false;
};

/// Worst BFS diameter over irredundant generating sets; adding generators
/// never increases a diameter, so the maximum over all generating sets is
/// attained on an irredundant one. The exhaustive mode walks sets up to
/// automorphism, which preserves diameters; `sets_examined` counts the sets
/// walked. Work is spread over `threads` workers and
/// merged deterministically.
SearchReport worst_diameter(const CodedGroup& group, const SearchMode& mode, unsigned threads = 0);

/// Largest irredundant generating set size by exhaustive enumeration up to
/// automorphism.
std::size_t max_irredundant_size(const CodedGroup& group);

/// diam_max of the cyclic group C_n by brute force over all generating subsets.
std::uint32_t cyclic_worst_diameter(std::uint32_t n);

struct SchreierCheck {
    GroupParams params;
    std::uint32_t diam_w = 0;  ///< exact diam_max(W)
    std::uint32_t diam_g = 0;  ///< exact diam_max(G)
    std::uint32_t diam_t = 0;  ///< exact diam_max(T)
    std::uint64_t general_bound = 0;  ///< 2 dG dT + dT + dG
    std::uint64_t center_bound = 0;   ///< 3 dG + 1 (when dT = 1)
    bool general_holds = false;
    bool center_holds = false;
};

/// Throws GuardExceeded when W is too large to search exhaustively.
SchreierCheck schreier_bound_check(const GroupParams& params, unsigned threads = 0);

}  // namespace wreathdiam

#include "wreathdiam/oracle_random.inl"
