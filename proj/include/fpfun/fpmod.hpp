#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fpfun/linalg.hpp"

namespace fpfun {

/// Finitely presented module: the cokernel of the relations matrix acting on
/// column space. Generators index rows, relations are columns. Modules carry
/// no canonical form; equality of the struct is equality of presentations.
struct FPModule {
    int generators = 0;
    IntMatrix relations;  // generators rows x (number of relations) columns

    FPModule() : relations(0, 0) {}
    FPModule(int gens, IntMatrix rel);

    static FPModule zero() { return FPModule(); }
    static FPModule free_module(int rank);
    /// Z/n as a one-generator module; n = 0 gives Z, n = +-1 a zero module.
    static FPModule cyclic(const Int& n);

    bool operator==(const FPModule&) const = default;
};

/// Structure-theorem invariants: free rank plus multiplicities of the Z/p^l
/// torsion summands.
struct StructureInvariants {
    int free_rank = 0;
    std::map<std::pair<Int, int>, int> torsion;  // (p, l) -> multiplicity >= 1

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const StructureInvariants&) const = default;

    /// Canonical sum notation, e.g. "Z/2+Z/8+Z"; "0" for the zero module.
    std::string to_string() const;
};

/// Morphism of finitely presented modules given on generators: column j of
/// `matrix` is the image of source generator j. Well-definedness (relations
/// map into relations) is certified at construction; the constructor throws
/// std::invalid_argument otherwise.
struct ModuleMorphism {
    FPModule src;
    FPModule tgt;
    IntMatrix matrix;  // tgt.generators x src.generators

    ModuleMorphism(FPModule s, FPModule t, IntMatrix m);

    static ModuleMorphism identity(const FPModule& m);
    static ModuleMorphism zero(const FPModule& s, const FPModule& t);

    /// True iff this is the zero morphism (image contained in the relations).
    bool is_zero_morphism() const;
};

/// g after f.
ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);

StructureInvariants structure_invariants(const FPModule& m);
bool is_zero_module(const FPModule& m);

/// Kernel module together with its inclusion into src(f).
std::pair<FPModule, ModuleMorphism> kernel(const ModuleMorphism& f);
/// Cokernel module together with the projection from tgt(f).
std::pair<FPModule, ModuleMorphism> cokernel(const ModuleMorphism& f);

struct Pushout {
    FPModule object;
    ModuleMorphism from_first;   // tgt(f) -> object
    ModuleMorphism from_second;  // tgt(g) -> object
};
/// Pushout of f and g (which must share their source), as the cokernel of
/// (f, -g): src -> tgt(f) (+) tgt(g).
Pushout pushout(const ModuleMorphism& f, const ModuleMorphism& g);

FPModule direct_sum(const FPModule& a, const FPModule& b);

/// Hom(M, N) as a finitely presented abelian group, with a concrete morphism
/// matrix for every group generator.
struct HomModule {
    FPModule group;
    std::vector<IntMatrix> generator_matrices;

    // presentation data: columns of `basis` are the vec'd generator matrices,
    // columns of `trivial` span the vec'd morphisms factoring through the
    // target relations
    IntMatrix basis;
    IntMatrix trivial;
    int m_generators = 0;
    int n_generators = 0;

    /// Coordinates of a concrete morphism matrix in this presentation; throws
    /// std::invalid_argument if the matrix is not a well-defined morphism.
    IntMatrix coordinates_of(const IntMatrix& f) const;
};

HomModule hom_module(const FPModule& m, const FPModule& n);

/// Hom(f, X): the precomposition map Hom(M', X) -> Hom(M, X) for f: M -> M',
/// expressed on the hom_module presentations.
ModuleMorphism induced_hom(const ModuleMorphism& f, const FPModule& x);
ModuleMorphism induced_hom(const ModuleMorphism& f, const HomModule& hom_tgt_x,
                           const HomModule& hom_src_x);

/// Hom(M, R): free on the kernel lattice of the transposed relations. The
/// columns of `functionals` are the generator functionals of the basis.
struct DualModule {
    FPModule module;  // free
    IntMatrix functionals;  // m.generators x rank
};
DualModule dual_module(const FPModule& m);

/// Contravariant dual of a morphism: Hom(f, R): dual(tgt) -> dual(src).
ModuleMorphism dual_morphism(const ModuleMorphism& f);

/// Cokernel of the transposed relations matrix of the free presentation.
FPModule auslander_transpose(const FPModule& m);

/// Generator of Ann(M): 0 for positive free rank, otherwise the largest
/// invariant factor (1 for the zero module).
Int annihilator(const FPModule& m);

/// Length of a finite module: prime factors of the invariant factors counted
/// with multiplicity. Throws std::invalid_argument on infinite modules.
int length_of_finite(const FPModule& m);

}  // namespace fpfun
