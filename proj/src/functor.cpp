#include "fpfun/functor.hpp"

#include <stdexcept>

namespace fpfun {

namespace {

// Existence of a module morphism s: S -> T with s . f congruent to `target`
// modulo the relations of T, where f: gS x gX and target: gT x gX are given
// on generators. Both the well-definedness of s and the congruence are one
// joint linear system over the integers:
//   F_s rel_S = rel_T Y    and    F_s f + rel_T W = target.
bool exists_morphism_with(const FPModule& s, const FPModule& t, const IntMatrix& f,
                          const IntMatrix& target) {
    const int gs = s.generators, rs = s.relations.cols();
    const int gt = t.generators, rt = t.relations.cols();
    const int gx = f.cols();
    IntMatrix eq1 = hstack(hstack(kron(s.relations.transpose(), IntMatrix::identity(gt)),
                                  -kron(IntMatrix::identity(rs), t.relations)),
                           IntMatrix(gt * rs, rt * gx));
    IntMatrix eq2 = hstack(hstack(kron(f.transpose(), IntMatrix::identity(gt)),
                                  IntMatrix(gt * gx, rt * rs)),
                           kron(IntMatrix::identity(gx), t.relations));
    IntMatrix rhs = vstack(IntMatrix(gt * rs, 1), vec(target));
    return solve(vstack(eq1, eq2), rhs).has_value();
}

}  // namespace

FPFunctor hom_functor(const FPModule& m) {
    return {ModuleMorphism(m, FPModule::zero(), IntMatrix(0, m.generators))};
}

FPFunctor tensor_functor(const FPModule& n) {
    return {ModuleMorphism(FPModule::free_module(n.generators),
                           FPModule::free_module(n.relations.cols()),
                           n.relations.transpose())};
}

FPFunctor forgetful_functor() { return hom_functor(FPModule::free_module(1)); }

FPFunctor zero_functor() { return hom_functor(FPModule::zero()); }

FPModule evaluate(const FPFunctor& g, const FPModule& x) {
    ModuleMorphism ind = induced_hom(g.alpha, x);
    return cokernel(ind).first;
}

int evaluate_at_fractions(const FPFunctor& g) {
    // Hom(A, Q) has dimension corank(rel_A); the image of Hom(B, Q) is spanned
    // by the pullbacks of a rational basis of functionals on B.
    int dim_hom_a = g.a().generators - rank_over_fractions(g.a().relations);
    IntMatrix functionals_b = kernel_basis(g.b().relations.transpose());
    return dim_hom_a - rank_over_fractions(g.alpha.matrix.transpose() * functionals_b);
}

FPModule defect(const FPFunctor& g) { return kernel(g.alpha).first; }

FPModule covdefect(const FPFunctor& g) { return cokernel(dual_morphism(g.alpha)).first; }

NatTrans::NatTrans(FPFunctor s, FPFunctor t, ModuleMorphism r)
    : src(std::move(s)), tgt(std::move(t)), rho(std::move(r)) {
    if (!(rho.src == tgt.a() && rho.tgt == src.a()))
        throw std::invalid_argument("NatTrans: rho must map tgt's source to src's source");
    // naturality: some sigma: B2 -> B1 with alpha1 . rho = sigma . alpha2
    if (!exists_morphism_with(tgt.b(), src.b(), tgt.alpha.matrix,
                              src.alpha.matrix * rho.matrix))
        throw std::invalid_argument("NatTrans: no compatible transformation of presentations");
}

NatTrans NatTrans::identity(const FPFunctor& g) {
    return NatTrans(g, g, ModuleMorphism::identity(g.a()));
}

NatTrans NatTrans::zero(const FPFunctor& s, const FPFunctor& t) {
    return NatTrans(s, t, ModuleMorphism::zero(t.a(), s.a()));
}

bool NatTrans::is_zero() const {
    // zero iff rho factors as tau . alpha2 for some tau: B2 -> A1
    return exists_morphism_with(tgt.b(), src.a(), tgt.alpha.matrix, rho.matrix);
}

NatTrans tensor_nat_trans(const ModuleMorphism& f) {
    FPFunctor s = tensor_functor(f.src);
    FPFunctor t = tensor_functor(f.tgt);
    ModuleMorphism rho(t.a(), s.a(), f.matrix.transpose());
    return NatTrans(std::move(s), std::move(t), std::move(rho));
}

FPFunctor nt_cokernel(const NatTrans& phi) {
    FPModule stacked_tgt = direct_sum(phi.tgt.b(), phi.src.a());
    IntMatrix stacked = vstack(phi.tgt.alpha.matrix, phi.rho.matrix);
    return {ModuleMorphism(phi.tgt.a(), stacked_tgt, stacked)};
}

FunctorKernel nt_kernel(const NatTrans& phi) {
    Pushout c = pushout(phi.rho, phi.tgt.alpha);
    ModuleMorphism u = c.from_first;  // A1 -> C
    Pushout d = pushout(u, phi.src.alpha);
    FPFunctor k{d.from_first};  // presented by v: C -> D
    return {k, NatTrans(k, phi.src, u)};
}

bool is_zero_functor(const FPFunctor& g) {
    // split monomorphism criterion: some beta: B -> A with beta . alpha = id
    return exists_morphism_with(g.b(), g.a(), g.alpha.matrix,
                                IntMatrix::identity(g.a().generators));
}

FPFunctor sigma_pushforward(const FPFunctor& g, const Int& m) {
    if (m == 0) throw std::invalid_argument("sigma_pushforward: modulus must be nonzero");
    Int mm = abs_int(m);
    auto reduce = [&](const FPModule& mod) {
        return FPModule(mod.generators,
                        hstack(mod.relations, IntMatrix::identity(mod.generators).scaled(mm)));
    };
    return {ModuleMorphism(reduce(g.a()), reduce(g.b()), g.alpha.matrix)};
}

FPFunctor agj_dual(const FPFunctor& g) {
    FPFunctor ta = tensor_functor(g.a());
    FPFunctor tb = tensor_functor(g.b());
    ModuleMorphism rho(tb.a(), ta.a(), g.alpha.matrix.transpose());
    return nt_kernel(NatTrans(std::move(ta), std::move(tb), std::move(rho))).functor;
}

}  // namespace fpfun
