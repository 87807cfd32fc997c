#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace gjsum {

// Finite group as an explicit multiplication table on {0, ..., n-1}.
// Identity is element 0 for every constructor. Axioms are checked fully
// on construction for n <= 512 and on a random sample above.
class FiniteGroup {
  public:
    static FiniteGroup from_table(std::vector<std::vector<int>> table, std::string label = "");
    static FiniteGroup cyclic(long n);
    static FiniteGroup dihedral(long order);     // order = 2n, n >= 1
    static FiniteGroup quaternion(long order);   // order = 4m, m >= 1: x^(2m)=1, y^2=x^m, yxy^-1=x^-1
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
    static FiniteGroup metacyclic(long p, long q, long r);  // C_p x| C_q, y x y^-1 = x^r

    int order() const { return n_; }
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int identity() const { return 0; }
    int power(int g, long k) const;  // g^k, k may be negative
    int element_order(int g) const;
    long exponent() const;
    bool is_abelian() const;
    bool is_cyclic() const;  // some element generates
    const std::string& label() const { return label_; }

  private:
    FiniteGroup() = default;
    void validate() const;
    int n_ = 0;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::string label_;
};

// Conjugacy classes in a fixed order: sorted by least element, so the
// identity class is always class 0. power_class realizes the map used by
// Adams operations: the class containing k-th powers of a class.
struct ConjugacyData {
    std::vector<std::vector<int>> classes;  // each sorted ascending
    std::vector<int> reps;                  // least element of each class
    std::vector<int> sizes;
    std::vector<int> class_of;              // element -> class index
};

ConjugacyData conjugacy(const FiniteGroup& g);

// Immutable bundle shared by everything downstream; the character table
// is attached lazily (see chartab.hpp).
struct GroupData;
using GroupRef = std::shared_ptr<const GroupData>;

GroupRef make_group(FiniteGroup g);

struct GroupData : std::enable_shared_from_this<GroupData> {
    FiniteGroup group;
    ConjugacyData conj;
    long exponent;

    int power_class(int cls, long k) const;  // class of rep^k

    // Lazily built character table; defined in chartab.cpp.
    const struct CharacterTable& table() const;

    GroupData(FiniteGroup g, ConjugacyData c, long e)
        : group(std::move(g)), conj(std::move(c)), exponent(e) {}
    ~GroupData();

  private:
    mutable std::once_flag table_once_;
    mutable std::shared_ptr<const struct CharacterTable> table_;
};

// Subgroup of a parent group together with its own abstract group object
// and the element correspondence both ways.
struct Subgroup {
    GroupRef parent;
    std::vector<int> elements;     // sorted parent indices, closed
    GroupRef group;                // abstract group on 0..|H|-1
    std::vector<int> from_parent;  // parent index -> subgroup index, -1 outside

    int to_parent(int h) const { return elements[h]; }
    bool contains(int g) const { return from_parent[g] >= 0; }
    int index_of(int g) const;  // raises if g not in subgroup
};

Subgroup subgroup_generated(const GroupRef& g, const std::vector<int>& gens);
Subgroup subgroup_from_elements(const GroupRef& g, std::vector<int> elements);
bool is_normal(const Subgroup& h);

// Quotient G/N for normal N, with the canonical projection.
struct Quotient {
    GroupRef group;        // the quotient group
    std::vector<int> proj;  // parent element -> quotient element
};

Quotient quotient(const GroupRef& g, const Subgroup& normal_subgroup);

// All normal subgroups, as joins of normal closures of single elements.
std::vector<Subgroup> normal_subgroups(const GroupRef& g);

// All subgroups generated by pairs of elements (a dedicated helper for
// small-corpus sweeps; complete for groups whose subgroups are all
// 2-generated, which covers the test corpus).
std::vector<Subgroup> two_generated_subgroups(const GroupRef& g);

}  // namespace gjsum
