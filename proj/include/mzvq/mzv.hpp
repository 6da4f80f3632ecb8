#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mzvq/precision.hpp"

namespace mzvq {

/// Composition (s_1,...,s_d) of positive integers with s_1 >= 2.
struct MzvIndex {
    std::vector<int> parts;

    explicit MzvIndex(std::vector<int> p) : parts(std::move(p)) {
        if (parts.empty()) throw std::invalid_argument("MzvIndex: empty index");
        for (int s : parts)
            if (s < 1) throw std::invalid_argument("MzvIndex: parts must be positive");
        if (parts[0] < 2)
            throw std::domain_error("divergent: s1 must be >= 2");
    }

    static MzvIndex parse(const std::string& spec);

    int depth() const { return static_cast<int>(parts.size()); }
    int weight() const {
        int w = 0;
        for (int s : parts) w += s;
        return w;
    }
};

/// pi with a certified error bound.
ApproxReal pi_value(const PrecisionConfig& cfg);

/// zeta(s) for integer s >= 2: direct summation to a cutoff plus an
/// Euler-Maclaurin tail with an explicit remainder bound.
ApproxReal zeta_single(int s, const PrecisionConfig& cfg);

/// Tail sum_{k>n} k^{-s} with a certified bound (Euler-Maclaurin with
/// em_terms correction terms; remainder bounded by the first omitted term).
ApproxReal zeta_tail(int s, long n, int em_terms);

/// Certified evaluation of zeta(s_1,...,s_d) by the inner-to-outer prefix
/// recursion with cutoff N on the outer index plus a tail correction:
///   depth 1        -> Euler-Maclaurin directly;
///   depth 2        -> the inner partial sum is expanded around its limit
///                     with Euler-Maclaurin terms, reducing the tail to
///                     single-zeta tails (works for s_2 = 1 as well);
///   depth >= 3,
///   inner all >= 2 -> first-order correction tail ~= zeta(s_2,...) *
///                     sum_{k>N} k^{-s_1}, remainder bounded via the inner
///                     tail estimate;
///   otherwise      -> crude bound zeta(2)^a (1+ln k)^b on the inner sums.
/// N grows until the certified bound meets the target; if the cap is hit a
/// PrecisionUnreachable error is raised rather than returning a loose value.
ApproxReal mzv_eval(const MzvIndex& idx, const PrecisionConfig& cfg);

/// All compositions of n into d positive parts, lexicographically.
std::vector<std::vector<int>> compositions(int n, int d);
void for_each_composition(int n, int d, const std::function<void(const std::vector<int>&)>& fn);

/// Q(4n,d) = sum of zeta(4 j_1,...,4 j_d) over compositions of n into d
/// positive parts, with the target error split evenly across terms.
ApproxReal q_bruteforce(int n, int d, const PrecisionConfig& cfg);

}  // namespace mzvq
