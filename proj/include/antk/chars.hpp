#ifndef ANTK_CHARS_HPP
#define ANTK_CHARS_HPP

#include <complex>
#include <memory>
#include <optional>
#include <vector>

#include "antk/common.hpp"

namespace antk::chars {

// One cyclic factor of (Z/q)^*.  For odd prime powers p^e this is the full
// unit group; 2^e (e >= 3) contributes <-1> x <5>.
struct CyclicFactor {
    int64_t prime_power = 1;   // p^e this factor lives in
    int64_t generator = 1;     // CRT-combined generator, a unit mod q
    int64_t order = 1;         // order of the generator
    std::vector<int32_t> dlog; // dlog over the local residue ring, -1 for non-units
};

struct GroupTables {
    int64_t q = 1;
    int64_t phi = 1;
    int64_t exponent = 1; // lcm of factor orders; character values are exponent-th roots of unity
    std::vector<CyclicFactor> factors;
    std::vector<int64_t> local_modulus; // prime power each factor indexes dlog by
};

class CharacterGroup;

// A Dirichlet character mod q.  Values are stored exactly as integer
// exponents of a primitive L-th root of unity (L = group exponent);
// complex doubles appear only at evaluation boundaries.
class DirichletCharacter {
public:
    DirichletCharacter() = default;

    int64_t modulus() const { return tables_->q; }
    int64_t conductor() const { return conductor_; }
    bool is_trivial() const { return trivial_; }
    bool is_real() const { return real_; }
    bool is_primitive() const { return conductor_ == tables_->q; }
    bool is_even() const { return even_; }    // chi(-1) == +1
    int parity() const { return even_ ? 0 : 1; } // the "a" in the completed L-function
    int index() const { return index_; }      // position in the group's deterministic ordering
    const std::vector<int64_t>& component_exponents() const { return exps_; }
    int64_t group_exponent() const { return tables_->exponent; } // the L of e^{2 pi i t / L}

    // Exact value: chi(n) = e^{2 pi i t / L} with t the returned exponent,
    // or nullopt when gcd(n, q) > 1.
    std::optional<int64_t> value_exponent(int64_t n) const;
    std::complex<double> evaluate(int64_t n) const;

    DirichletCharacter conjugate() const;

    friend class CharacterGroup;
    friend DirichletCharacter induced_product(const DirichletCharacter&, const DirichletCharacter&);

private:
    std::shared_ptr<const GroupTables> tables_;
    std::vector<int64_t> exps_; // k_j, 0 <= k_j < order_j
    int64_t conductor_ = 1;
    int index_ = 0;
    bool trivial_ = true;
    bool real_ = true;
    bool even_ = true;
};

// All phi(q) characters mod q, in a deterministic order: trivial first,
// then lexicographic on component_exponents.
class CharacterGroup {
public:
    explicit CharacterGroup(int64_t q);

    int64_t modulus() const { return tables_->q; }
    int64_t phi() const { return tables_->phi; }
    int64_t exponent() const { return tables_->exponent; }
    std::size_t size() const { return characters_.size(); }
    const DirichletCharacter& character(std::size_t i) const { return characters_.at(i); }
    const std::vector<DirichletCharacter>& characters() const { return characters_; }
    const DirichletCharacter& trivial_character() const { return characters_.front(); }

    // Index of the conjugate of character i.
    std::size_t conjugate_index(std::size_t i) const;

private:
    std::shared_ptr<const GroupTables> tables_;
    std::vector<DirichletCharacter> characters_;
};

CharacterGroup character_group(int64_t q);

// Smallest f | q such that chi is induced from a character mod f, and that
// primitive character itself.
std::pair<int64_t, DirichletCharacter> conductor_and_primitive(const DirichletCharacter& chi);

// The primitive character inducing the pointwise product chi * chi1
// (as a character mod lcm of the two moduli).
DirichletCharacter induced_product(const DirichletCharacter& chi, const DirichletCharacter& chi1);

// tau(chi) = sum_{a mod q} chi(a) e^{2 pi i a / q}, by direct summation.
std::complex<double> gauss_sum(const DirichletCharacter& chi);

int64_t euler_phi(int64_t n);

} // namespace antk::chars

#endif
