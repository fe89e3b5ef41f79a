#include "homposet/finite_ring.hpp"

#include <algorithm>
#include <sstream>

namespace homposet {

namespace {

void check_cap(std::uint64_t size, const Limits& limits, const char* what) {
    if (size > limits.table_cap) {
        std::ostringstream msg;
        msg << what << " of size " << size << " exceeds table cap " << limits.table_cap;
        throw Error(ErrorCode::CapExceeded, msg.str());
    }
}

// Polynomials over F_p, coefficients low-degree first.
using Poly = std::vector<std::uint32_t>;

void normalize(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p is prime and small: Fermat.
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    std::uint32_t e = p - 2;
    while (e > 0) {
        if (e & 1U) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

// Remainder of f modulo a non-zero g.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
    normalize(f);
    const std::size_t dg = g.size() - 1;
    const std::uint32_t lead_inv = inv_mod(g.back(), p);
    while (f.size() >= g.size()) {
        std::uint32_t coef = static_cast<std::uint32_t>(std::uint64_t{f.back()} * lead_inv % p);
        std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) {
            std::uint64_t sub = std::uint64_t{coef} * g[i] % p;
            f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
        }
        normalize(f);
    }
    return f;
}

// All monic polynomials of degree d, in lexicographic order of their
// coefficient vectors read from the constant term upward.
std::vector<Poly> monic_polys(std::uint32_t p, std::uint32_t d) {
    std::vector<Poly> out;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    out.reserve(count);
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly f(d + 1, 0);
        f[d] = 1;
        // The constant term is the most significant digit.
        std::uint64_t c = code;
        for (std::uint32_t i = d; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        out.push_back(std::move(f));
    }
    return out;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const auto deg = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
        for (const auto& g : monic_polys(p, d)) {
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t k) {
    for (auto& f : monic_polys(p, k)) {
        if (is_irreducible(f, p)) return f;
    }
    throw Error(ErrorCode::Internal, "no irreducible polynomial found");
}

RingPtr FiniteRing::build(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero, Elem one,
                          Provenance prov, bool allow_zero) {
    if (size == 0) throw Error(ErrorCode::InvalidArgument, "empty carrier");
    if (add.size() != size * size || mul.size() != size * size) {
        throw Error(ErrorCode::InvalidArgument, "table dimensions do not match carrier size");
    }
    if (zero >= size || one >= size) throw Error(ErrorCode::InvalidArgument, "zero/one outside carrier");
    if (!allow_zero && (size == 1 || zero == one)) {
        throw Error(ErrorCode::ZeroRingExcluded, "the zero ring is not admitted");
    }
    std::shared_ptr<FiniteRing> ring(new FiniteRing());
    ring->size_ = size;
    ring->add_ = std::move(add);
    ring->mul_ = std::move(mul);
    ring->zero_ = zero;
    ring->one_ = one;
    ring->prov_ = std::move(prov);
    ring->neg_.assign(size, zero);
    for (Elem a = 0; a < size; ++a) {
        for (Elem b = 0; b < size; ++b) {
            if (ring->add_[a * size + b] == zero) {
                ring->neg_[a] = b;
                break;
            }
        }
    }
    ring->commutative_ = true;
    for (Elem a = 0; a < size && ring->commutative_; ++a) {
        for (Elem b = a + 1; b < size; ++b) {
            if (ring->mul_[a * size + b] != ring->mul_[b * size + a]) {
                ring->commutative_ = false;
                break;
            }
        }
    }
    return ring;
}

RingPtr FiniteRing::from_tables(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero, Elem one,
                                Provenance prov) {
    for (auto x : add) {
        if (x >= size) throw Error(ErrorCode::InvalidArgument, "addition table entry outside carrier");
    }
    for (auto x : mul) {
        if (x >= size) throw Error(ErrorCode::InvalidArgument, "multiplication table entry outside carrier");
    }
    auto ring = build(size, std::move(add), std::move(mul), zero, one, std::move(prov), false);
    if (auto bad = find_axiom_violation(*ring)) throw Error(ErrorCode::InvalidArgument, *bad);
    return ring;
}

bool FiniteRing::same_tables(const FiniteRing& other) const noexcept {
    return size_ == other.size_ && zero_ == other.zero_ && one_ == other.one_ && add_ == other.add_ &&
           mul_ == other.mul_;
}

std::uint64_t FiniteRing::additive_order(Elem a) const {
    std::uint64_t order = 1;
    Elem x = a;
    while (x != zero_) {
        x = add(x, a);
        ++order;
    }
    return order;
}

std::optional<std::string> find_axiom_violation(const FiniteRing& r) {
    const auto n = static_cast<Elem>(r.size());
    auto fail = [](const char* law, Elem a, Elem b, Elem c) {
        std::ostringstream msg;
        msg << law << " fails at (" << a << ", " << b << ", " << c << ")";
        return std::optional<std::string>(msg.str());
    };
    for (Elem a = 0; a < n; ++a) {
        if (r.add(a, r.zero()) != a || r.add(r.zero(), a) != a) return fail("additive identity", a, 0, 0);
        if (r.mul(a, r.one()) != a || r.mul(r.one(), a) != a) return fail("multiplicative identity", a, 0, 0);
        if (r.add(a, r.neg(a)) != r.zero()) return fail("additive inverse", a, 0, 0);
        for (Elem b = 0; b < n; ++b) {
            if (r.add(a, b) != r.add(b, a)) return fail("additive commutativity", a, b, 0);
            for (Elem c = 0; c < n; ++c) {
                if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return fail("additive associativity", a, b, c);
                if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return fail("multiplicative associativity", a, b, c);
                if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return fail("left distributivity", a, b, c);
                if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) return fail("right distributivity", a, b, c);
            }
        }
    }
    return std::nullopt;
}

RingElement RingElement::operator+(const RingElement& other) const {
    if (ring != other.ring) throw Error(ErrorCode::RingMismatch, "elements of different rings");
    return {ring, ring->add(index, other.index)};
}

RingElement RingElement::operator*(const RingElement& other) const {
    if (ring != other.ring) throw Error(ErrorCode::RingMismatch, "elements of different rings");
    return {ring, ring->mul(index, other.index)};
}

RingElement RingElement::operator-() const { return {ring, ring->neg(index)}; }

RingPtr make_zmod(std::uint32_t n, const Limits& limits) {
    if (n <= 1) throw Error(ErrorCode::ZeroRingExcluded, "Z/nZ requires n >= 2");
    check_cap(n, limits, "Z/nZ");
    std::vector<Elem> add(std::size_t{n} * n), mul(std::size_t{n} * n);
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            add[a * n + b] = (a + b) % n;
            mul[a * n + b] = static_cast<Elem>(std::uint64_t{a} * b % n);
        }
    }
    return FiniteRing::build(n, std::move(add), std::move(mul), 0, 1, provenance::ZMod{n}, false);
}

RingPtr make_finite_field(std::uint32_t p, std::uint32_t k, const Limits& limits) {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "field degree must be positive");
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        check_cap(q, limits, "finite field");
    }
    const auto modulus = smallest_irreducible(p, k);
    const auto n = static_cast<std::size_t>(q);

    auto to_poly = [&](Elem x) {
        Poly f(k, 0);
        for (std::uint32_t i = 0; i < k; ++i) {
            f[i] = x % p;
            x /= p;
        }
        return f;
    };
    auto to_index = [&](Poly f) {
        f.resize(k, 0);
        Elem x = 0;
        for (std::uint32_t i = k; i-- > 0;) x = x * p + f[i];
        return x;
    };

    std::vector<Elem> add(n * n), mul(n * n);
    for (Elem a = 0; a < n; ++a) {
        auto fa = to_poly(a);
        for (Elem b = 0; b < n; ++b) {
            auto fb = to_poly(b);
            Poly sum(k);
            for (std::uint32_t i = 0; i < k; ++i) sum[i] = (fa[i] + fb[i]) % p;
            add[a * n + b] = to_index(sum);
            Poly prod(2 * k, 0);
            for (std::uint32_t i = 0; i < k; ++i) {
                for (std::uint32_t j = 0; j < k; ++j) {
                    prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{fa[i]} * fb[j]) % p);
                }
            }
            mul[a * n + b] = to_index(poly_mod(prod, modulus, p));
        }
    }
    return FiniteRing::build(n, std::move(add), std::move(mul), 0, 1, provenance::Field{p, k, modulus}, false);
}

RingPtr make_product(const RingPtr& left, const RingPtr& right, const Limits& limits) {
    if (!left || !right) throw Error(ErrorCode::InvalidArgument, "null ring");
    if (left->is_zero_ring() || right->is_zero_ring()) {
        throw Error(ErrorCode::ZeroRingExcluded, "product factor is the zero ring");
    }
    const std::size_t n1 = left->size();
    const std::size_t n2 = right->size();
    check_cap(std::uint64_t{n1} * n2, limits, "product ring");
    const std::size_t n = n1 * n2;
    std::vector<Elem> add(n * n), mul(n * n);
    for (Elem a = 0; a < n; ++a) {
        const Elem a1 = a / n2, a2 = a % n2;
        for (Elem b = 0; b < n; ++b) {
            const Elem b1 = b / n2, b2 = b % n2;
            add[a * n + b] = static_cast<Elem>(left->add(a1, b1) * n2 + right->add(a2, b2));
            mul[a * n + b] = static_cast<Elem>(left->mul(a1, b1) * n2 + right->mul(a2, b2));
        }
    }
    const auto zero = static_cast<Elem>(left->zero() * n2 + right->zero());
    const auto one = static_cast<Elem>(left->one() * n2 + right->one());
    return FiniteRing::build(n, std::move(add), std::move(mul), zero, one, provenance::Product{left, right}, false);
}

namespace {

bool is_field_like(const FiniteRing& r) {
    if (!r.is_commutative() || r.is_zero_ring()) return false;
    for (Elem a = 0; a < r.size(); ++a) {
        if (a == r.zero()) continue;
        bool invertible = false;
        for (Elem b = 0; b < r.size() && !invertible; ++b) invertible = r.mul(a, b) == r.one();
        if (!invertible) return false;
    }
    return true;
}

}  // namespace

RingPtr make_matrix_ring(const RingPtr& base, std::uint32_t k, const Limits& limits) {
    if (!base) throw Error(ErrorCode::InvalidArgument, "null ring");
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "matrix dimension must be positive");
    if (!is_field_like(*base)) throw Error(ErrorCode::BaseNotField, "matrix base ring must be a field");
    const std::size_t q = base->size();
    const std::size_t entries = std::size_t{k} * k;
    std::uint64_t n64 = 1;
    for (std::size_t i = 0; i < entries; ++i) {
        n64 *= q;
        check_cap(n64, limits, "matrix ring");
    }
    const auto n = static_cast<std::size_t>(n64);

    auto decode = [&](Elem x) {
        std::vector<Elem> m(entries);
        for (std::size_t pos = entries; pos-- > 0;) {
            m[pos] = static_cast<Elem>(x % q);
            x = static_cast<Elem>(x / q);
        }
        return m;
    };
    auto encode = [&](const std::vector<Elem>& m) {
        Elem x = 0;
        for (std::size_t pos = 0; pos < entries; ++pos) x = static_cast<Elem>(x * q + m[pos]);
        return x;
    };

    std::vector<std::vector<Elem>> mats(n);
    for (Elem x = 0; x < n; ++x) mats[x] = decode(x);

    std::vector<Elem> add(n * n), mul(n * n);
    std::vector<Elem> tmp(entries);
    for (Elem a = 0; a < n; ++a) {
        const auto& ma = mats[a];
        for (Elem b = 0; b < n; ++b) {
            const auto& mb = mats[b];
            for (std::size_t pos = 0; pos < entries; ++pos) tmp[pos] = base->add(ma[pos], mb[pos]);
            add[a * n + b] = encode(tmp);
            for (std::uint32_t i = 0; i < k; ++i) {
                for (std::uint32_t j = 0; j < k; ++j) {
                    Elem acc = base->zero();
                    for (std::uint32_t l = 0; l < k; ++l) {
                        acc = base->add(acc, base->mul(ma[i * k + l], mb[l * k + j]));
                    }
                    tmp[i * k + j] = acc;
                }
            }
            mul[a * n + b] = encode(tmp);
        }
    }
    std::vector<Elem> zero_m(entries, base->zero());
    std::vector<Elem> one_m(entries, base->zero());
    for (std::uint32_t i = 0; i < k; ++i) one_m[i * k + i] = base->one();
    return FiniteRing::build(n, std::move(add), std::move(mul), encode(zero_m), encode(one_m),
                             provenance::Matrix{base, k}, false);
}

}  // namespace homposet
