#include "antk/chars.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace antk::chars {

namespace {

constexpr int64_t kGroupModulusCap = 10'000'000; // dlog tables are O(q) ints

std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
    std::vector<std::pair<int64_t, int>> f;
    for (int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.emplace_back(p, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

int64_t phi_of_prime_power(int64_t p, int e) {
    int64_t pe = 1;
    for (int i = 0; i < e - 1; ++i) pe *= p;
    return pe * (p - 1);
}

// Smallest primitive root mod p, lifted if needed so it stays primitive for
// every power of the odd prime p.
int64_t primitive_root_odd(int64_t p, int e) {
    int64_t ord = p - 1;
    auto fac = factorize(ord);
    int64_t g = 2;
    for (;; ++g) {
        bool ok = true;
        for (auto& [r, unused] : fac) {
            (void)unused;
            if (powmod64(g, ord / r, p) == 1) { ok = false; break; }
        }
        if (ok) break;
    }
    if (e == 1) return g;
    int64_t p2 = p * p;
    if (powmod64(g, p - 1, p2) == 1) g += p;
    return g;
}

int64_t mod_inverse(int64_t a, int64_t m) {
    int64_t t = 0, newt = 1, r = m, newr = a % m;
    while (newr != 0) {
        int64_t qt = r / newr;
        int64_t t2 = t - qt * newt;
        t = newt;
        newt = t2;
        int64_t r2 = r - qt * newr;
        r = newr;
        newr = r2;
    }
    if (t < 0) t += m;
    return t;
}

// CRT lift: x = r (mod pe), x = 1 (mod q/pe), 1 <= x <= q.
int64_t crt_lift(int64_t r, int64_t pe, int64_t q) {
    int64_t m = q / pe;
    if (m == 1) {
        int64_t x = r % pe;
        return x == 0 ? pe : x;
    }
    int64_t minv = mod_inverse(m % pe, pe);
    int64_t t = mulmod64(((r - 1) % pe + pe) % pe, minv, pe);
    int64_t x = (1 + mulmod64(m % q, t, q)) % q;
    return x == 0 ? q : x;
}

std::shared_ptr<GroupTables> build_tables(int64_t q) {
    if (q <= 0) throw std::invalid_argument("character_group: modulus must be positive");
    if (q > kGroupModulusCap) throw resource_error("character_group: modulus exceeds table cap");
    auto t = std::make_shared<GroupTables>();
    t->q = q;
    t->phi = 1;
    t->exponent = 1;
    for (auto& [p, e] : factorize(q)) {
        int64_t pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        if (p == 2) {
            if (e == 1) continue; // (Z/2)^* is trivial
            if (e == 2) {
                CyclicFactor f;
                f.prime_power = 4;
                f.order = 2;
                f.generator = crt_lift(3, 4, q);
                f.dlog.assign(4, -1);
                f.dlog[1] = 0;
                f.dlog[3] = 1;
                t->phi *= 2;
                t->exponent = std::lcm(t->exponent, f.order);
                t->factors.push_back(std::move(f));
                continue;
            }
            // e >= 3: <-1> x <5>
            CyclicFactor fs;
            fs.prime_power = pe;
            fs.order = 2;
            fs.generator = crt_lift(pe - 1, pe, q);
            fs.dlog.assign(pe, -1);
            CyclicFactor f5;
            f5.prime_power = pe;
            f5.order = pe / 4;
            f5.generator = crt_lift(5, pe, q);
            f5.dlog.assign(pe, -1);
            int64_t v = 1;
            for (int64_t j = 0; j < f5.order; ++j) {
                fs.dlog[v] = 0;
                f5.dlog[v] = static_cast<int32_t>(j);
                fs.dlog[pe - v] = 1;
                f5.dlog[pe - v] = static_cast<int32_t>(j);
                v = mulmod64(v, 5, pe);
            }
            t->phi *= pe / 2;
            t->exponent = std::lcm(t->exponent, fs.order);
            t->exponent = std::lcm(t->exponent, f5.order);
            t->factors.push_back(std::move(fs));
            t->factors.push_back(std::move(f5));
            continue;
        }
        CyclicFactor f;
        f.prime_power = pe;
        f.order = phi_of_prime_power(p, e);
        int64_t g = primitive_root_odd(p, e);
        f.generator = crt_lift(g, pe, q);
        f.dlog.assign(pe, -1);
        int64_t v = 1;
        for (int64_t j = 0; j < f.order; ++j) {
            f.dlog[v] = static_cast<int32_t>(j);
            v = mulmod64(v, g % pe, pe);
        }
        t->phi *= f.order;
        t->exponent = std::lcm(t->exponent, f.order);
        t->factors.push_back(std::move(f));
    }
    return t;
}

std::optional<int64_t> exponent_at(const GroupTables& t, const std::vector<int64_t>& exps, int64_t n) {
    int64_t q = t.q;
    if (q == 1) return 0;
    int64_t r = n % q;
    if (r < 0) r += q;
    if (gcd64(r, q) != 1) return std::nullopt;
    int64_t L = t.exponent;
    int64_t total = 0;
    for (std::size_t j = 0; j < t.factors.size(); ++j) {
        const auto& f = t.factors[j];
        int32_t d = f.dlog[r % f.prime_power];
        int64_t contrib = static_cast<int64_t>(
            static_cast<__int128>(exps[j]) * d % f.order * (L / f.order) % L);
        total = (total + contrib) % L;
    }
    return total;
}

bool induced_mod_f(const GroupTables& t, const std::vector<int64_t>& exps, int64_t f) {
    // chi factors through (Z/f)^* iff chi(n) = 1 for every unit n = 1 (mod f)
    for (int64_t n = 1 + f; n <= t.q; n += f) {
        if (gcd64(n, t.q) != 1) continue;
        auto e = exponent_at(t, exps, n);
        if (!e || *e != 0) return false;
    }
    return true;
}

int64_t conductor_of(const GroupTables& t, const std::vector<int64_t>& exps) {
    std::vector<int64_t> divisors;
    for (int64_t d = 1; d * d <= t.q; ++d) {
        if (t.q % d == 0) {
            divisors.push_back(d);
            if (d != t.q / d) divisors.push_back(t.q / d);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    for (int64_t f : divisors) {
        if (induced_mod_f(t, exps, f)) return f;
    }
    return t.q;
}

// exact comparison of e^{2 pi i a / La} and e^{2 pi i b / Lb}
bool same_root_of_unity(int64_t a, int64_t La, int64_t b, int64_t Lb) {
    __int128 lhs = static_cast<__int128>(a) * Lb - static_cast<__int128>(b) * La;
    __int128 mod = static_cast<__int128>(La) * Lb;
    lhs %= mod;
    if (lhs < 0) lhs += mod;
    return lhs == 0;
}

} // namespace

std::optional<int64_t> DirichletCharacter::value_exponent(int64_t n) const {
    return exponent_at(*tables_, exps_, n);
}

std::complex<double> DirichletCharacter::evaluate(int64_t n) const {
    auto e = value_exponent(n);
    if (!e) return {0.0, 0.0};
    int64_t L = tables_->exponent;
    int64_t t = *e;
    // exact values on the axes
    if (t == 0) return {1.0, 0.0};
    if (2 * t == L) return {-1.0, 0.0};
    if (4 * t == L) return {0.0, 1.0};
    if (4 * t == 3 * L) return {0.0, -1.0};
    double ang = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(L);
    return {std::cos(ang), std::sin(ang)};
}

DirichletCharacter DirichletCharacter::conjugate() const {
    DirichletCharacter c = *this;
    for (std::size_t j = 0; j < exps_.size(); ++j) {
        c.exps_[j] = exps_[j] == 0 ? 0 : tables_->factors[j].order - exps_[j];
    }
    c.index_ = -1; // re-derived by the group when needed
    return c;
}

CharacterGroup::CharacterGroup(int64_t q) {
    tables_ = build_tables(q);
    const auto& t = *tables_;
    std::size_t nf = t.factors.size();
    std::vector<int64_t> exps(nf, 0);
    characters_.reserve(static_cast<std::size_t>(t.phi));
    for (;;) {
        DirichletCharacter chi;
        chi.tables_ = tables_;
        chi.exps_ = exps;
        chi.trivial_ = std::all_of(exps.begin(), exps.end(), [](int64_t k) { return k == 0; });
        chi.real_ = true;
        for (std::size_t j = 0; j < nf; ++j) {
            if ((2 * exps[j]) % t.factors[j].order != 0) { chi.real_ = false; break; }
        }
        if (q <= 2) {
            chi.even_ = true;
        } else {
            chi.even_ = (*exponent_at(t, exps, q - 1) == 0);
        }
        chi.conductor_ = conductor_of(t, exps);
        chi.index_ = static_cast<int>(characters_.size());
        characters_.push_back(std::move(chi));
        if (nf == 0) break;
        // odometer, least-significant factor last: lexicographic ordering
        std::size_t j = nf;
        bool done = false;
        while (j > 0) {
            --j;
            if (++exps[j] < t.factors[j].order) break;
            exps[j] = 0;
            if (j == 0) done = true;
        }
        if (done) break;
    }
    std::sort(characters_.begin(), characters_.end(),
              [](const DirichletCharacter& a, const DirichletCharacter& b) {
                  if (a.is_trivial() != b.is_trivial()) return a.is_trivial();
                  return a.component_exponents() < b.component_exponents();
              });
    for (std::size_t i = 0; i < characters_.size(); ++i) {
        characters_[i].index_ = static_cast<int>(i);
    }
}

std::size_t CharacterGroup::conjugate_index(std::size_t i) const {
    auto conj = characters_.at(i).conjugate();
    for (std::size_t k = 0; k < characters_.size(); ++k) {
        if (characters_[k].component_exponents() == conj.component_exponents()) return k;
    }
    throw std::logic_error("conjugate_index: group not closed under conjugation");
}

CharacterGroup character_group(int64_t q) {
    if (q == 0) throw std::invalid_argument("character_group: q = 0 is not a modulus");
    return CharacterGroup(q);
}

std::pair<int64_t, DirichletCharacter> conductor_and_primitive(const DirichletCharacter& chi) {
    int64_t f = chi.conductor();
    if (f == chi.modulus() && chi.index() >= 0) return {f, chi};
    CharacterGroup gf(f);
    int64_t q = chi.modulus();
    for (const auto& psi : gf.characters()) {
        bool match = true;
        for (int64_t n = 1; n <= f && match; ++n) {
            if (gcd64(n, f) != 1) continue;
            int64_t m = n;
            while (gcd64(m, q) != 1) m += f; // lift n to a unit mod q
            auto a = psi.value_exponent(n);
            auto b = chi.value_exponent(m);
            if (!a || !b || !same_root_of_unity(*a, psi.group_exponent(), *b, chi.group_exponent()))
                match = false;
        }
        if (match) return {f, psi};
    }
    throw std::logic_error("conductor_and_primitive: no inducing character found");
}

DirichletCharacter induced_product(const DirichletCharacter& chi, const DirichletCharacter& chi1) {
    int64_t Q = std::lcm(chi.modulus(), chi1.modulus());
    CharacterGroup gq(Q);
    const auto& t = *gq.trivial_character().tables_;
    std::vector<int64_t> exps(t.factors.size(), 0);
    for (std::size_t j = 0; j < t.factors.size(); ++j) {
        int64_t g = t.factors[j].generator; // unit mod Q, so a unit mod both moduli
        auto a = chi.value_exponent(g);
        auto b = chi1.value_exponent(g);
        if (!a || !b) throw std::logic_error("induced_product: generator not coprime");
        // combined value e^{2 pi i u}, u = a/La + b/Lb; its order divides m_j,
        // so k_j = u * m_j is integral
        int64_t m = t.factors[j].order;
        __int128 num = (static_cast<__int128>(*a) * chi1.group_exponent() +
                        static_cast<__int128>(*b) * chi.group_exponent());
        __int128 den = static_cast<__int128>(chi.group_exponent()) * chi1.group_exponent();
        __int128 k = num * m;
        if (k % den != 0) throw std::logic_error("induced_product: value order does not divide factor order");
        int64_t kj = static_cast<int64_t>((k / den) % m);
        if (kj < 0) kj += m;
        exps[j] = kj;
    }
    for (const auto& cand : gq.characters()) {
        if (cand.component_exponents() == exps) {
            return conductor_and_primitive(cand).second;
        }
    }
    throw std::logic_error("induced_product: product not found in group");
}

std::complex<double> gauss_sum(const DirichletCharacter& chi) {
    int64_t q = chi.modulus();
    int64_t L = chi.group_exponent();
    KahanSum re, im;
    for (int64_t a = 1; a <= q; ++a) {
        auto e = chi.value_exponent(a);
        if (!e) continue;
        // chi(a) e^{2 pi i a / q} = e^{2 pi i (e/L + a/q)}
        double ang = 2.0 * std::numbers::pi *
                     (static_cast<double>(*e) / static_cast<double>(L) +
                      static_cast<double>(a) / static_cast<double>(q));
        re.add(std::cos(ang));
        im.add(std::sin(ang));
    }
    return {re.value(), im.value()};
}

int64_t euler_phi(int64_t n) {
    int64_t r = n;
    for (auto& [p, e] : factorize(n)) {
        (void)e;
        r -= r / p;
    }
    return r;
}

} // namespace antk::chars
