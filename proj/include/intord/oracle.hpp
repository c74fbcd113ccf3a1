#ifndef INTORD_ORACLE_HPP
#define INTORD_ORACLE_HPP

// Brute-force ground truth for small ground sets: every labelled strict
// partial order on {0..n-1}, interval-order recognition, duplicated
// holdings, and isomorphism classes by exhaustive relabelling.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace intord
{

inline constexpr std::size_t kOracleMaxPoints = 5;

class ResourceBoundError : public std::length_error
{
public:
    using std::length_error::length_error;
};

using ElementSet = std::uint32_t; // bit x set <=> element x is in the set

class Poset
{
public:
    Poset() = default;
    explicit Poset(std::size_t n) : m_n(n)
    {
        if (n > kOracleMaxPoints) {
            throw ResourceBoundError("Poset: ground set larger than oracle cap");
        }
    }

    // Builds from explicit pairs (x, y) meaning x < y. Does not close
    // transitively; use is_valid() to check.
    static Poset from_relations(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>> &less)
    {
        Poset p(n);
        for (auto [x, y] : less) {
            p.set_less(x, y);
        }
        return p;
    }

    static Poset chain(std::size_t n)
    {
        Poset p(n);
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = x + 1; y < n; ++y) {
                p.set_less(x, y);
            }
        }
        return p;
    }

    static Poset antichain(std::size_t n)
    {
        return Poset(n);
    }

    [[nodiscard]] std::size_t size() const
    {
        return m_n;
    }

    [[nodiscard]] bool less(std::size_t x, std::size_t y) const
    {
        return ((m_up[x] >> y) & 1U) != 0;
    }

    void set_less(std::size_t x, std::size_t y)
    {
        m_up[x] |= ElementSet{1} << y;
        m_down[y] |= ElementSet{1} << x;
    }

    // D(x) = {y : y < x}
    [[nodiscard]] ElementSet down_set(std::size_t x) const
    {
        return m_down[x];
    }
    // U(x) = {y : y > x}
    [[nodiscard]] ElementSet up_set(std::size_t x) const
    {
        return m_up[x];
    }

    [[nodiscard]] bool is_valid() const
    {
        for (std::size_t x = 0; x < m_n; ++x) {
            if (less(x, x)) {
                return false;
            }
            for (std::size_t y = 0; y < m_n; ++y) {
                if (less(x, y) && less(y, x)) {
                    return false;
                }
                if (less(x, y) && (m_up[y] & ~m_up[x]) != 0) {
                    return false;
                }
            }
        }
        return true;
    }

    friend bool operator==(const Poset &, const Poset &) = default;

private:
    std::size_t m_n = 0;
    std::array<ElementSet, kOracleMaxPoints> m_up{};
    std::array<ElementSet, kOracleMaxPoints> m_down{};
};

namespace detail
{

inline void check_oracle_size(std::size_t n)
{
    if (n > kOracleMaxPoints) {
        throw ResourceBoundError("oracle enumeration is capped at " + std::to_string(kOracleMaxPoints) + " points, got "
                                 + std::to_string(n));
    }
}

inline bool is_subset(ElementSet a, ElementSet b)
{
    return (a & ~b) == 0;
}

inline bool sets_form_chain(const std::vector<ElementSet> &sets)
{
    for (std::size_t a = 0; a < sets.size(); ++a) {
        for (std::size_t b = a + 1; b < sets.size(); ++b) {
            if (!is_subset(sets[a], sets[b]) && !is_subset(sets[b], sets[a])) {
                return false;
            }
        }
    }
    return true;
}

inline void extend_posets(const Poset &p, std::size_t target, const std::function<void(const Poset &)> &visit)
{
    const std::size_t k = p.size();
    if (k == target) {
        visit(p);
        return;
    }
    const ElementSet all = (ElementSet{1} << k) - 1;
    for (ElementSet below = 0; below <= all; ++below) {
        bool closed = true;
        for (std::size_t d = 0; d < k && closed; ++d) {
            if (((below >> d) & 1U) != 0 && !is_subset(p.down_set(d), below)) {
                closed = false;
            }
        }
        if (!closed) {
            continue;
        }
        for (ElementSet above = 0; above <= all; ++above) {
            if ((above & below) != 0) {
                continue;
            }
            bool ok = true;
            for (std::size_t u = 0; u < k && ok; ++u) {
                if (((above >> u) & 1U) == 0) {
                    continue;
                }
                // up-closed, and everything below the new element is below u
                ok = is_subset(p.up_set(u), above) && is_subset(below, p.down_set(u));
            }
            if (!ok) {
                continue;
            }
            Poset q(k + 1);
            for (std::size_t x = 0; x < k; ++x) {
                for (std::size_t y = 0; y < k; ++y) {
                    if (p.less(x, y)) {
                        q.set_less(x, y);
                    }
                }
                if (((below >> x) & 1U) != 0) {
                    q.set_less(x, k);
                }
                if (((above >> x) & 1U) != 0) {
                    q.set_less(k, x);
                }
            }
            extend_posets(q, target, visit);
        }
    }
}

} // namespace detail

// Visits every strict partial order on {0..n-1} exactly once. Element k is
// added to each poset on {0..k-1} by choosing a down-closed strict down-set
// and a compatible up-closed strict up-set.
inline void for_each_poset(std::size_t n, const std::function<void(const Poset &)> &visit)
{
    detail::check_oracle_size(n);
    detail::extend_posets(Poset(0), n, visit);
}

inline std::vector<Poset> enumerate_posets(std::size_t n)
{
    std::vector<Poset> out;
    for_each_poset(n, [&out](const Poset &p) { out.push_back(p); });
    return out;
}

inline bool down_sets_form_chain(const Poset &p)
{
    std::vector<ElementSet> d;
    for (std::size_t x = 0; x < p.size(); ++x) {
        d.push_back(p.down_set(x));
    }
    return detail::sets_form_chain(d);
}

inline bool up_sets_form_chain(const Poset &p)
{
    std::vector<ElementSet> u;
    for (std::size_t x = 0; x < p.size(); ++x) {
        u.push_back(p.up_set(x));
    }
    return detail::sets_form_chain(u);
}

// Down-sets nested under inclusion. The up-set condition is equivalent;
// a disagreement means the input or this code is broken.
inline bool is_interval_order(const Poset &p)
{
    const bool by_down = down_sets_form_chain(p);
    if (by_down != up_sets_form_chain(p)) {
        throw std::logic_error("is_interval_order: down-set and up-set criteria disagree");
    }
    return by_down;
}

// Unordered pairs {x, y} with D(x) = D(y) and U(x) = U(y).
inline std::size_t duplicated_pair_count(const Poset &p)
{
    std::size_t count = 0;
    for (std::size_t x = 0; x < p.size(); ++x) {
        for (std::size_t y = x + 1; y < p.size(); ++y) {
            if (p.down_set(x) == p.down_set(y) && p.up_set(x) == p.up_set(y)) {
                ++count;
            }
        }
    }
    return count;
}

// Size of the largest class of elements sharing identical holdings.
inline std::size_t max_holding_multiplicity(const Poset &p)
{
    std::map<std::pair<ElementSet, ElementSet>, std::size_t> classes;
    std::size_t best = 0;
    for (std::size_t x = 0; x < p.size(); ++x) {
        best = std::max(best, ++classes[{p.down_set(x), p.up_set(x)}]);
    }
    return best;
}

namespace detail
{

template <typename Fn>
void for_each_permutation(std::size_t n, Fn &&fn)
{
    std::array<std::size_t, kOracleMaxPoints> perm{};
    std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n), std::size_t{0});
    do {
        fn(perm);
    } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n)));
}

inline std::string serialize_relabelled(const Poset &p, const std::array<std::size_t, kOracleMaxPoints> &perm)
{
    const std::size_t n = p.size();
    std::string s(1 + n * n, '0');
    s[0] = static_cast<char>(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (p.less(perm[i], perm[j])) {
                s[1 + i * n + j] = '1';
            }
        }
    }
    return s;
}

} // namespace detail

// Lexicographically smallest serialization (size byte, then the row-major
// relation matrix) over all n! relabellings.
inline std::string canonical_form(const Poset &p)
{
    detail::check_oracle_size(p.size());
    std::string best;
    detail::for_each_permutation(p.size(), [&](const auto &perm) {
        std::string s = detail::serialize_relabelled(p, perm);
        if (best.empty() || s < best) {
            best = std::move(s);
        }
    });
    return best;
}

inline std::size_t automorphism_count(const Poset &p)
{
    detail::check_oracle_size(p.size());
    std::size_t count = 0;
    const std::size_t n = p.size();
    detail::for_each_permutation(n, [&](const auto &perm) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (p.less(i, j) != p.less(perm[i], perm[j])) {
                    return;
                }
            }
        }
        ++count;
    });
    return count;
}

struct OracleCensus {
    std::size_t n = 0;
    std::size_t labelled_posets = 0;
    std::size_t unlabelled_posets = 0;
    std::size_t labelled_interval = 0;
    std::size_t unlabelled_interval = 0;
    std::size_t rigid_unlabelled = 0;
    // isomorphism classes of interval orders by duplicated-pair count
    std::map<std::size_t, std::size_t> pair_histogram;
    // same, restricted to classes where no three elements share holdings
    std::map<std::size_t, std::size_t> pair_histogram_parts_le2;
    // every interval order has trivial automorphism group iff it has no
    // duplicated pair
    bool rigidity_matches_automorphisms = true;
};

inline OracleCensus oracle_census(std::size_t n)
{
    detail::check_oracle_size(n);
    OracleCensus c;
    c.n = n;
    std::set<std::string> all_classes;
    std::map<std::string, Poset> interval_classes;
    for_each_poset(n, [&](const Poset &p) {
        ++c.labelled_posets;
        std::string form = canonical_form(p);
        all_classes.insert(form);
        if (!is_interval_order(p)) {
            return;
        }
        ++c.labelled_interval;
        const bool no_pairs = duplicated_pair_count(p) == 0;
        if (no_pairs != (automorphism_count(p) == 1)) {
            c.rigidity_matches_automorphisms = false;
        }
        interval_classes.emplace(std::move(form), p);
    });
    c.unlabelled_posets = all_classes.size();
    c.unlabelled_interval = interval_classes.size();
    for (const auto &[form, rep] : interval_classes) {
        const std::size_t pairs = duplicated_pair_count(rep);
        ++c.pair_histogram[pairs];
        if (max_holding_multiplicity(rep) <= 2) {
            ++c.pair_histogram_parts_le2[pairs];
        }
        if (pairs == 0) {
            ++c.rigid_unlabelled;
        }
    }
    return c;
}

} // namespace intord

#endif
