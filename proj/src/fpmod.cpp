#include "fpfun/fpmod.hpp"

#include <sstream>
#include <stdexcept>

namespace fpfun {

namespace {

IntMatrix top_rows(const IntMatrix& m, int r) {
    IntMatrix out(r, m.cols());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

}  // namespace

FPModule::FPModule(int gens, IntMatrix rel) : generators(gens), relations(std::move(rel)) {
    if (relations.rows() != generators)
        throw std::invalid_argument("FPModule: relations must have one row per generator");
}

FPModule FPModule::free_module(int rank) { return FPModule(rank, IntMatrix(rank, 0)); }

FPModule FPModule::cyclic(const Int& n) {
    IntMatrix rel(1, 1);
    rel(0, 0) = abs_int(n);
    return FPModule(1, rel);
}

std::string StructureInvariants::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [pl, mult] : torsion)
        for (int i = 0; i < mult; ++i) {
            os << (first ? "" : "+") << "Z/" << to_decimal(pow_int(pl.first, unsigned(pl.second)));
            first = false;
        }
    for (int i = 0; i < free_rank; ++i) {
        os << (first ? "" : "+") << "Z";
        first = false;
    }
    return os.str();
}

ModuleMorphism::ModuleMorphism(FPModule s, FPModule t, IntMatrix m)
    : src(std::move(s)), tgt(std::move(t)), matrix(std::move(m)) {
    if (matrix.rows() != tgt.generators || matrix.cols() != src.generators)
        throw std::invalid_argument("ModuleMorphism: matrix shape mismatch");
    if (!solve(tgt.relations, matrix * src.relations))
        throw std::invalid_argument("ModuleMorphism: not well defined on relations");
}

ModuleMorphism ModuleMorphism::identity(const FPModule& m) {
    return ModuleMorphism(m, m, IntMatrix::identity(m.generators));
}

ModuleMorphism ModuleMorphism::zero(const FPModule& s, const FPModule& t) {
    return ModuleMorphism(s, t, IntMatrix(t.generators, s.generators));
}

bool ModuleMorphism::is_zero_morphism() const {
    return solve(tgt.relations, matrix).has_value();
}

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
    if (!(f.tgt == g.src)) throw std::invalid_argument("compose: middle modules differ");
    return ModuleMorphism(f.src, g.tgt, g.matrix * f.matrix);
}

StructureInvariants structure_invariants(const FPModule& m) {
    SmithDecomposition d = snf(m.relations);
    StructureInvariants out;
    out.free_rank = m.generators - d.rank();
    for (const Int& di : d.diagonal()) {
        if (di == 0 || di == 1) continue;
        for (const Factor& f : factorize(di)) ++out.torsion[{f.p, f.exponent}];
    }
    return out;
}

bool is_zero_module(const FPModule& m) { return structure_invariants(m).is_zero(); }

std::pair<FPModule, ModuleMorphism> kernel(const ModuleMorphism& f) {
    const int gm = f.src.generators;
    // x lies in the kernel's preimage lattice iff f(x) is hit by the target
    // relations: solve F x + rel_tgt y = 0 jointly and project to x.
    IntMatrix joint = kernel_basis(hstack(f.matrix, f.tgt.relations));
    IntMatrix basis = lattice_column_basis(top_rows(joint, gm));
    // the source relations land in the lattice, and expressing them in the
    // basis gives the kernel's presentation
    auto rel = solve(basis, f.src.relations);
    if (!rel) throw std::logic_error("kernel: source relations escaped the kernel lattice");
    FPModule k(basis.cols(), *rel);
    return {k, ModuleMorphism(k, f.src, basis)};
}

std::pair<FPModule, ModuleMorphism> cokernel(const ModuleMorphism& f) {
    FPModule c(f.tgt.generators, hstack(f.matrix, f.tgt.relations));
    return {c, ModuleMorphism(f.tgt, c, IntMatrix::identity(f.tgt.generators))};
}

Pushout pushout(const ModuleMorphism& f, const ModuleMorphism& g) {
    if (!(f.src == g.src)) throw std::invalid_argument("pushout: sources differ");
    FPModule sum = direct_sum(f.tgt, g.tgt);
    ModuleMorphism diff(f.src, sum, vstack(f.matrix, -g.matrix));
    auto [object, proj] = cokernel(diff);
    IntMatrix i1 = vstack(IntMatrix::identity(f.tgt.generators),
                          IntMatrix(g.tgt.generators, f.tgt.generators));
    IntMatrix i2 = vstack(IntMatrix(f.tgt.generators, g.tgt.generators),
                          IntMatrix::identity(g.tgt.generators));
    return {object, ModuleMorphism(f.tgt, object, i1), ModuleMorphism(g.tgt, object, i2)};
}

FPModule direct_sum(const FPModule& a, const FPModule& b) {
    return FPModule(a.generators + b.generators, block_diag(a.relations, b.relations));
}

HomModule hom_module(const FPModule& m, const FPModule& n) {
    const int gm = m.generators, rm = m.relations.cols();
    const int gn = n.generators, rn = n.relations.cols();
    // well-definedness F rel_m = rel_n Y as a linear system on (vec F, vec Y)
    IntMatrix sys = hstack(kron(m.relations.transpose(), IntMatrix::identity(gn)),
                           -kron(IntMatrix::identity(rm), n.relations));
    IntMatrix joint = kernel_basis(sys);
    IntMatrix basis = lattice_column_basis(top_rows(joint, gn * gm));

    // morphisms factoring through the target relations: rel_n[:,i] placed in
    // column j, for all i, j
    IntMatrix trivial(gn * gm, rn * gm);
    for (int j = 0; j < gm; ++j)
        for (int i = 0; i < rn; ++i)
            for (int row = 0; row < gn; ++row)
                trivial(j * gn + row, j * rn + i) = n.relations(row, i);

    auto rel = solve(basis, trivial);
    if (!rel) throw std::logic_error("hom_module: trivial morphisms escaped the lattice");

    HomModule h;
    h.group = FPModule(basis.cols(), *rel);
    h.basis = basis;
    h.trivial = trivial;
    h.m_generators = gm;
    h.n_generators = gn;
    for (int c = 0; c < basis.cols(); ++c)
        h.generator_matrices.push_back(unvec(basis.column(c), gn, gm));
    return h;
}

IntMatrix HomModule::coordinates_of(const IntMatrix& f) const {
    if (f.rows() != n_generators || f.cols() != m_generators)
        throw std::invalid_argument("HomModule: matrix shape mismatch");
    auto sol = solve(hstack(basis, trivial), vec(f));
    if (!sol) throw std::invalid_argument("HomModule: matrix is not a well-defined morphism");
    return top_rows(*sol, basis.cols());
}

ModuleMorphism induced_hom(const ModuleMorphism& f, const FPModule& x) {
    return induced_hom(f, hom_module(f.tgt, x), hom_module(f.src, x));
}

ModuleMorphism induced_hom(const ModuleMorphism& f, const HomModule& hom_tgt_x,
                           const HomModule& hom_src_x) {
    IntMatrix mat(hom_src_x.group.generators, hom_tgt_x.group.generators);
    for (int c = 0; c < hom_tgt_x.group.generators; ++c) {
        IntMatrix coords = hom_src_x.coordinates_of(hom_tgt_x.generator_matrices[c] * f.matrix);
        for (int i = 0; i < mat.rows(); ++i) mat(i, c) = coords(i, 0);
    }
    return ModuleMorphism(hom_tgt_x.group, hom_src_x.group, mat);
}

DualModule dual_module(const FPModule& m) {
    IntMatrix k = kernel_basis(m.relations.transpose());
    return {FPModule::free_module(k.cols()), k};
}

ModuleMorphism dual_morphism(const ModuleMorphism& f) {
    DualModule dsrc = dual_module(f.src);
    DualModule dtgt = dual_module(f.tgt);
    // each target functional pulls back along f and lies in the saturated
    // kernel lattice of the source, so the coordinates are integral
    auto coords = solve(dsrc.functionals, f.matrix.transpose() * dtgt.functionals);
    if (!coords) throw std::logic_error("dual_morphism: pullback escaped the dual lattice");
    return ModuleMorphism(dtgt.module, dsrc.module, *coords);
}

FPModule auslander_transpose(const FPModule& m) {
    return FPModule(m.relations.cols(), m.relations.transpose());
}

Int annihilator(const FPModule& m) {
    SmithDecomposition d = snf(m.relations);
    if (d.rank() < m.generators) return 0;
    Int largest = 1;
    for (const Int& di : d.diagonal())
        if (di != 0) largest = di;  // divisibility chain: last nonzero is largest
    return largest;
}

int length_of_finite(const FPModule& m) {
    SmithDecomposition d = snf(m.relations);
    if (d.rank() < m.generators)
        throw std::invalid_argument("length_of_finite: module has positive rank");
    int len = 0;
    for (const Int& di : d.diagonal())
        if (di > 1) len += omega_with_multiplicity(di);
    return len;
}

}  // namespace fpfun
