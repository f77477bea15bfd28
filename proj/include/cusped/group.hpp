#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cusped/graph.hpp"
#include "cusped/word.hpp"

namespace cusped {

enum class GroupKind { Free, FreeAbelian, Surface, FreeProduct };

struct FreeProductFactor {
    bool abelian = false;
    int rank = 0;
};

// A group with a decidable closed-form normal form: free, free-abelian,
// surface (genus >= 2, standard one-relator presentation), or a free product
// of free and free-abelian factors.
struct GroupSpec {
    GroupKind kind = GroupKind::Free;
    int rank = 0;   // rank, or genus for Surface (generators = 2*genus)
    std::vector<FreeProductFactor> factors;  // FreeProduct only

    static GroupSpec free_group(int rank);
    static GroupSpec free_abelian(int rank);
    static GroupSpec surface(int genus);
    static GroupSpec free_product(std::vector<FreeProductFactor> factors);

    int num_generators() const;
    std::string generator_name(int idx) const;
    std::vector<Word> relators() const;  // empty except Surface

    // Which free-product factor a generator belongs to (FreeProduct only).
    int factor_of(int gen_idx) const;
};

// Canonical representative; two words map to equal outputs iff they represent
// the same group element.  Idempotent.
Word normal_form(const GroupSpec& spec, const Word& w);

// Ball of the Cayley graph on the canonical forms of length <= radius.
// Vertex labels are normal-form strings ("" is the identity).
MetricGraph cayley_ball(const GroupSpec& spec, int radius,
                        std::size_t max_vertices = 2'000'000);

// -------------------------------------------------------------------------
// Peripheral structure

enum class SubgroupShape { Cyclic, StandardFactor, Lattice };

struct PeripheralSubgroup {
    std::string name;
    std::vector<Word> generators;

    // derived at validation time
    SubgroupShape shape = SubgroupShape::Cyclic;
    Word cyclic_gen;                 // Cyclic: normal form of the generator
    std::vector<int> factor_letters; // StandardFactor: generator indices
    std::vector<std::vector<long long>> lattice;  // Lattice: exponent vectors
};

struct PeripheralSpec {
    std::vector<PeripheralSubgroup> subgroups;
};

// Classify the subgroup shape per group kind and precompute membership data.
// Throws unsupported_error for shapes without a terminating membership test.
PeripheralSpec validate_peripherals(const GroupSpec& spec, const std::vector<std::pair<std::string, std::vector<Word>>>& raw);

// Membership of (the element represented by) w in the given subgroup.
bool peripheral_member(const GroupSpec& spec, const PeripheralSubgroup& sub, const Word& w);

// Shortlex-least element of the coset w * sub (the coset key).
Word coset_representative(const GroupSpec& spec, const PeripheralSubgroup& sub, const Word& w);

struct CosetTrace {
    int peripheral_index = 0;
    Word representative;            // shortlex-least member
    std::vector<int> members;       // ball vertex ids
    bool connected_in_ball = true;  // flagged, not fatal
};

// Partition of ball vertices into coset traces, one list per peripheral
// subgroup in order.  Ball must come from cayley_ball on the same spec.
std::vector<CosetTrace> peripheral_cosets(const GroupSpec& spec, const PeripheralSpec& per,
                                          const MetricGraph& ball);

// -------------------------------------------------------------------------
// Induced peripheral structure on a finite-index subgroup (Def of induced
// structure via double-coset representatives).  The subgroup is the kernel of
// a homomorphism onto a product of cyclic groups.

struct FiniteQuotientHom {
    std::vector<long long> moduli;                    // target = prod Z/m_i (m_i >= 1)
    std::vector<std::vector<long long>> gen_images;   // one vector per generator

    std::vector<long long> image(const Word& w) const;
    bool in_kernel(const Word& w) const;
};

struct InducedPeripheralEntry {
    int peripheral_index = 0;
    Word double_coset_rep;
    std::vector<Word> generators;  // generators of H ∩ d P d^-1
};

struct InducedPeripheralResult {
    std::vector<InducedPeripheralEntry> entries;
    bool complete = true;  // false: not every double coset seen at ball scale
};

InducedPeripheralResult induced_peripheral(const GroupSpec& spec, const FiniteQuotientHom& hom,
                                           const PeripheralSpec& per, int ball_radius);

}  // namespace cusped
