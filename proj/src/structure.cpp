#include "homposet/structure.hpp"

#include <algorithm>
#include <deque>

namespace homposet {

MultiplicativeSet units(const RingPtr& ring) {
    const auto n = static_cast<Elem>(ring->size());
    ElementSet u(n);
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            if (ring->mul(a, b) == ring->one() && ring->mul(b, a) == ring->one()) {
                u.insert(a);
                break;
            }
        }
    }
    return MultiplicativeSet{ring, std::move(u)};
}

MultiplicativeSet regular_elements(const RingPtr& ring) {
    const auto n = static_cast<Elem>(ring->size());
    ElementSet reg(n);
    for (Elem x = 0; x < n; ++x) {
        bool regular = true;
        for (Elem r = 0; r < n && regular; ++r) {
            if (r == ring->zero()) continue;
            if (ring->mul(r, x) == ring->zero() || ring->mul(x, r) == ring->zero()) regular = false;
        }
        if (regular) reg.insert(x);
    }
    return MultiplicativeSet{ring, std::move(reg)};
}

Ideal jacobson_radical(const RingPtr& ring) {
    const auto n = static_cast<Elem>(ring->size());
    const auto u = units(ring).members;
    ElementSet j(n);
    for (Elem x = 0; x < n; ++x) {
        bool quasi_regular = true;
        for (Elem r = 0; r < n && quasi_regular; ++r) {
            const Elem rx = ring->mul(r, x);
            for (Elem s = 0; s < n; ++s) {
                if (!u.contains(ring->add(ring->one(), ring->mul(rx, s)))) {
                    quasi_regular = false;
                    break;
                }
            }
        }
        if (quasi_regular) j.insert(x);
    }
    if (!is_ideal(*ring, j)) throw Error(ErrorCode::Internal, "quasi-regular elements do not form an ideal");
    return Ideal{ring, std::move(j)};
}

Ideal ideal_generated_by(const RingPtr& ring, const std::vector<Elem>& generators) {
    const auto n = static_cast<Elem>(ring->size());
    ElementSet members(n, {ring->zero()});
    std::deque<Elem> work;
    auto push = [&](Elem x) {
        if (!members.contains(x)) {
            members.insert(x);
            work.push_back(x);
        }
    };
    for (Elem g : generators) {
        if (g >= n) throw Error(ErrorCode::InvalidArgument, "generator outside carrier");
        push(g);
    }
    while (!work.empty()) {
        const Elem x = work.front();
        work.pop_front();
        push(ring->neg(x));
        for (Elem r = 0; r < n; ++r) {
            push(ring->mul(r, x));
            push(ring->mul(x, r));
        }
        for (Elem y : members.members()) push(ring->add(x, y));
    }
    return Ideal{ring, std::move(members)};
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (a.ring != b.ring) throw Error(ErrorCode::RingMismatch, "ideals of different rings");
    ElementSet s(a.ring->size());
    for (Elem x : a.members.members()) {
        for (Elem y : b.members.members()) s.insert(a.ring->add(x, y));
    }
    return Ideal{a.ring, std::move(s)};
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    if (a.ring != b.ring) throw Error(ErrorCode::RingMismatch, "ideals of different rings");
    return Ideal{a.ring, a.members & b.members};
}

namespace {

void sort_canonical(std::vector<Ideal>& ideals) {
    std::sort(ideals.begin(), ideals.end(),
              [](const Ideal& a, const Ideal& b) { return canonical_less(a.members, b.members); });
}

bool contains_set(const std::vector<Ideal>& ideals, const ElementSet& s) {
    return std::any_of(ideals.begin(), ideals.end(), [&](const Ideal& i) { return i.members == s; });
}

}  // namespace

std::vector<Ideal> enumerate_ideals(const RingPtr& ring) {
    std::vector<Ideal> ideals;
    for (Elem x = 0; x < ring->size(); ++x) {
        auto principal = ideal_generated_by(ring, {x});
        if (!contains_set(ideals, principal.members)) ideals.push_back(std::move(principal));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t count = ideals.size();
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = i + 1; j < count; ++j) {
                auto s = ideal_sum(ideals[i], ideals[j]);
                if (!contains_set(ideals, s.members)) {
                    ideals.push_back(std::move(s));
                    grew = true;
                }
            }
        }
    }
    sort_canonical(ideals);
    return ideals;
}

std::vector<Ideal> prime_ideals(const RingPtr& ring) {
    if (!ring->is_commutative()) throw Error(ErrorCode::NotCommutative, "prime spectrum needs a commutative ring");
    std::vector<Ideal> primes;
    const auto n = static_cast<Elem>(ring->size());
    for (auto& ideal : enumerate_ideals(ring)) {
        if (!ideal.is_proper()) continue;
        bool prime = true;
        for (Elem a = 0; a < n && prime; ++a) {
            if (ideal.contains(a)) continue;
            for (Elem b = 0; b < n; ++b) {
                if (!ideal.contains(b) && ideal.contains(ring->mul(a, b))) {
                    prime = false;
                    break;
                }
            }
        }
        if (prime) primes.push_back(std::move(ideal));
    }
    return primes;
}

bool is_completely_prime(const Ideal& ideal) {
    if (!ideal.is_proper()) return false;
    const auto complement = ideal.members.complement();
    const auto elems = complement.members();
    for (Elem a : elems) {
        for (Elem b : elems) {
            if (!complement.contains(ideal.ring->mul(a, b))) return false;
        }
    }
    return true;
}

bool is_saturated(const RingPtr& ring, const ElementSet& members) {
    const auto n = static_cast<Elem>(ring->size());
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            if (members.contains(ring->mul(x, y)) && !(members.contains(x) && members.contains(y))) return false;
        }
    }
    return true;
}

bool is_directly_finite(const RingPtr& ring) {
    const auto n = static_cast<Elem>(ring->size());
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            if (ring->mul(x, y) == ring->one() && ring->mul(y, x) != ring->one()) return false;
        }
    }
    return true;
}

bool is_field(const FiniteRing& ring) {
    if (!ring.is_commutative() || ring.is_zero_ring()) return false;
    for (Elem a = 0; a < ring.size(); ++a) {
        if (a == ring.zero()) continue;
        bool invertible = false;
        for (Elem b = 0; b < ring.size() && !invertible; ++b) invertible = ring.mul(a, b) == ring.one();
        if (!invertible) return false;
    }
    return true;
}

DenominatorReport denominator_analysis(const RingPtr& ring, const ElementSet& t) {
    if (!is_submonoid(*ring, t)) throw Error(ErrorCode::NotASubmonoid, "T must be a multiplicative submonoid");
    const auto n = static_cast<Elem>(ring->size());
    const auto tm = t.members();
    DenominatorReport report;

    // Left Ore: for all r in R and t in T, Tr meets Rt.
    report.is_left_ore = true;
    for (Elem r = 0; r < n && report.is_left_ore; ++r) {
        for (Elem s : tm) {
            ElementSet rt(n);
            for (Elem x = 0; x < n; ++x) rt.insert(ring->mul(x, s));
            bool meets = std::any_of(tm.begin(), tm.end(), [&](Elem u) { return rt.contains(ring->mul(u, r)); });
            if (!meets) {
                report.is_left_ore = false;
                break;
            }
        }
    }

    // Left reversible: r t = 0 with t in T forces u r = 0 for some u in T.
    report.is_left_reversible = true;
    for (Elem r = 0; r < n && report.is_left_reversible; ++r) {
        bool killed_on_right = std::any_of(tm.begin(), tm.end(), [&](Elem s) { return ring->mul(r, s) == ring->zero(); });
        if (!killed_on_right) continue;
        bool killed_on_left = std::any_of(tm.begin(), tm.end(), [&](Elem u) { return ring->mul(u, r) == ring->zero(); });
        if (!killed_on_left) report.is_left_reversible = false;
    }
    report.is_left_denominator = report.is_left_ore && report.is_left_reversible;

    report.ass = ElementSet(n);
    for (Elem r = 0; r < n; ++r) {
        if (std::any_of(tm.begin(), tm.end(), [&](Elem s) { return ring->mul(s, r) == ring->zero(); })) {
            report.ass.insert(r);
        }
    }
    report.ass_is_ideal = is_ideal(*ring, report.ass);

    if (report.is_left_denominator) {
        if (!report.ass_is_ideal) throw Error(ErrorCode::Internal, "ass(T) of a left denominator set is not an ideal");
        if (!report.ass.is_full()) {
            auto q = make_quotient(ring, Ideal{ring, report.ass});
            const auto qu = units(q.ring).members;
            for (Elem s : tm) {
                if (!qu.contains(q.projection(s))) {
                    throw Error(ErrorCode::Internal, "denominator image is not invertible in R/ass(T)");
                }
            }
            report.fraction_ring = std::move(q);
        }
    }
    return report;
}

}  // namespace homposet
