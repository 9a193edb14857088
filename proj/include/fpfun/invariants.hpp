#pragma once

#include "fpfun/functor.hpp"

namespace fpfun {

/// Class of a functor in the Grothendieck group: free-rank component plus a
/// sparse table of signed multiplicities over (prime, exponent). Entries with
/// multiplicity zero are never stored.
struct K0Class {
    long pr = 0;
    std::map<std::pair<Int, int>, long> torsion;

    K0Class operator+(const K0Class& o) const;
    K0Class operator-(const K0Class& o) const;
    K0Class operator-() const;
    K0Class scaled(long c) const;
    bool operator==(const K0Class&) const = default;
    bool is_zero() const { return pr == 0 && torsion.empty(); }

    std::string to_string() const;
};

/// Class of an honest module (nonnegative multiplicities).
K0Class k0_class(const StructureInvariants& s);

/// Left module class [A] - [B] + [coker alpha].
K0Class lmc(const FPFunctor& g);

/// Right module class, obtained from lmc by the transpose/dual conversion of
/// the Grothendieck groups of left and right modules.
K0Class rmc(const FPFunctor& g);

/// Free-rank component of the left module class; equals dim G(Q).
long rank(const FPFunctor& g);

/// K0 data in the form used by the Hilbert function:
/// value(p, n) = rank * n + sum_l coefficients[(p,l)] * min(l, n).
struct HilbertData {
    long rank = 0;
    std::map<std::pair<Int, int>, long> coefficients;

    long value(const Int& p, int n) const;
};

HilbertData hilbert_data(const FPFunctor& g);

/// Hilbert function by the multiplicity formula.
long hilbert_value(const FPFunctor& g, const Int& p, int n);

/// Hilbert function computed directly: length of the covariant defect of the
/// base change of G along R -> R/p^n.
long hilbert_direct(const FPFunctor& g, const Int& p, int n);

/// Eventually-exact linear form of the Hilbert function at p:
/// value(p, n) = slope * n + constant for all n >= threshold.
struct HilbertPolynomial {
    long slope = 0;
    long constant = 0;
    int threshold = 1;

    bool operator==(const HilbertPolynomial&) const = default;
};

HilbertPolynomial hilbert_polynomial(const FPFunctor& g, const Int& p);

}  // namespace fpfun
