#pragma once

#include "fpfun/fpmod.hpp"

namespace fpfun {

/// Finitely presented functor, stored solely by its presentation morphism
/// alpha: A -> B, meaning the cokernel of Hom(alpha, -):
///   Hom(B, -) -> Hom(A, -) -> G -> 0.
struct FPFunctor {
    ModuleMorphism alpha;

    const FPModule& a() const { return alpha.src; }
    const FPModule& b() const { return alpha.tgt; }
};

/// Hom(M, -), presented by M -> 0.
FPFunctor hom_functor(const FPModule& m);
/// (N (x) -), presented by the transposed relations matrix between free
/// modules; evaluation at X is N (x) X.
FPFunctor tensor_functor(const FPModule& n);
/// Hom(R, -), the forgetful functor.
FPFunctor forgetful_functor();
FPFunctor zero_functor();

/// G(X), computed as the cokernel of Hom(B, X) -> Hom(A, X).
FPModule evaluate(const FPFunctor& g, const FPModule& x);

/// dim over the fraction field of G(Q), by rational linear algebra.
int evaluate_at_fractions(const FPFunctor& g);

/// Contravariant defect: kernel of the presentation morphism.
FPModule defect(const FPFunctor& g);
/// Covariant defect: cokernel of the dualized presentation morphism.
FPModule covdefect(const FPFunctor& g);

/// Natural transformation src -> tgt of finitely presented functors. The data
/// is a morphism rho: tgt.A -> src.A; naturality (a compatible sigma between
/// the target ends of the presentations exists) is certified at construction.
struct NatTrans {
    FPFunctor src;
    FPFunctor tgt;
    ModuleMorphism rho;

    NatTrans(FPFunctor s, FPFunctor t, ModuleMorphism r);

    static NatTrans identity(const FPFunctor& g);
    static NatTrans zero(const FPFunctor& s, const FPFunctor& t);

    /// True iff this transformation is zero, i.e. rho factors through the
    /// target presentation morphism.
    bool is_zero() const;
};

/// Transformation (N (x) -) -> (N' (x) -) induced by f: N -> N'.
NatTrans tensor_nat_trans(const ModuleMorphism& f);

/// Cokernel functor of phi, presented by stacking tgt's presentation with rho.
FPFunctor nt_cokernel(const NatTrans& phi);

struct FunctorKernel {
    FPFunctor functor;
    NatTrans inclusion;  // functor -> src(phi)
};
/// Kernel functor of phi, via two pushouts of the presentation data.
FunctorKernel nt_kernel(const NatTrans& phi);

/// Exact zero test: G vanishes iff its presentation morphism splits.
bool is_zero_functor(const FPFunctor& g);

/// Base change along R -> R/m at the presentation level (the presentation
/// matrices acquire m-multiples of the generators as extra relations). The
/// result is integer data annihilated by m. Throws on m = 0.
FPFunctor sigma_pushforward(const FPFunctor& g, const Int& m);

/// Auslander-Gruson-Jensen dual, computed as the kernel of the induced map
/// of tensor functors (A (x) -) -> (B (x) -).
FPFunctor agj_dual(const FPFunctor& g);

}  // namespace fpfun
