#include "homposet/epimorphism.hpp"

#include <algorithm>
#include <sstream>

#include "homposet/search.hpp"

namespace homposet {

namespace {

using boost::multiprecision::abs;

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a != b) std::swap(m[a], m[b]);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

std::vector<BigInt> smith_diagonal(IntMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m.front().size();
    const std::size_t steps = std::min(rows, cols);
    std::vector<BigInt> diag;
    diag.reserve(steps);

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Pivot: smallest non-zero magnitude in the trailing block.
            std::size_t pr = rows, pc = cols;
            BigInt best = 0;
            for (std::size_t i = t; i < rows; ++i) {
                for (std::size_t j = t; j < cols; ++j) {
                    if (m[i][j] != 0 && (best == 0 || abs(m[i][j]) < best)) {
                        best = abs(m[i][j]);
                        pr = i;
                        pc = j;
                    }
                }
            }
            if (pr == rows) {
                // Remaining block is zero.
                for (std::size_t r = t; r < steps; ++r) diag.push_back(0);
                return diag;
            }
            swap_rows(m, t, pr);
            swap_cols(m, t, pc);

            bool residue = false;
            const BigInt pivot = m[t][t];
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                const BigInt q = m[i][t] / pivot;
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) residue = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                const BigInt q = m[t][j] / pivot;
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) residue = true;
            }
            if (residue) continue;

            // Pivot must divide the whole trailing block.
            std::size_t bad_row = rows;
            for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (m[i][j] % pivot != 0) {
                        bad_row = i;
                        break;
                    }
                }
            }
            if (bad_row != rows) {
                for (std::size_t j = t; j < cols; ++j) m[t][j] += m[bad_row][j];
                continue;
            }
            diag.push_back(abs(pivot));
            break;
        }
    }
    return diag;
}

bool AbelianGroup::is_finite() const {
    return std::none_of(invariants.begin(), invariants.end(), [](const BigInt& d) { return d == 0; });
}

BigInt AbelianGroup::order() const {
    BigInt n = 1;
    for (const auto& d : invariants) n *= d;
    return n;
}

std::string AbelianGroup::describe() const {
    if (invariants.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < invariants.size(); ++i) {
        if (i) out << " + ";
        if (invariants[i] == 0) {
            out << "Z";
        } else {
            out << "Z/" << invariants[i];
        }
    }
    return out.str();
}

AbelianGroup abelian_group_from_relations(std::size_t generators, const IntMatrix& relations) {
    AbelianGroup g;
    g.generators = generators;
    if (generators == 0) return g;
    auto diag = smith_diagonal(relations);
    for (const auto& d : diag) {
        if (d != 1) g.invariants.push_back(d);
    }
    // Columns beyond the diagonal are free.
    for (std::size_t i = diag.size(); i < generators; ++i) g.invariants.push_back(0);
    std::sort(g.invariants.begin(), g.invariants.end(), [](const BigInt& a, const BigInt& b) {
        if (a == 0 || b == 0) return b == 0 && a != 0;
        return a < b;
    });
    return g;
}

AbelianGroup tensor_cokernel(const RingMorphism& f) {
    const FiniteRing& R = *f.source();
    const FiniteRing& S = *f.target();
    const std::size_t n = S.size();

    // C = S / f(R) as an abelian group: classes of the additive subgroup f(R).
    const auto image = f.image().members();
    constexpr Elem unassigned = ~Elem{0};
    std::vector<Elem> cls(n, unassigned);
    std::vector<Elem> reps;
    for (Elem s = 0; s < n; ++s) {
        if (cls[s] != unassigned) continue;
        const auto c = static_cast<Elem>(reps.size());
        reps.push_back(s);
        for (Elem y : image) cls[S.add(s, y)] = c;
    }
    const std::size_t m = reps.size();
    std::vector<Elem> cadd(m * m);
    for (Elem a = 0; a < m; ++a) {
        for (Elem b = 0; b < m; ++b) cadd[a * m + b] = cls[S.add(reps[a], reps[b])];
    }

    const auto bs = additive_basis(S);
    const auto bc = additive_basis(m, cadd, cls[S.zero()]);
    const auto br = additive_basis(R);
    const std::size_t k = bs.generators.size();
    const std::size_t l = bc.generators.size();
    const std::size_t cols = k * l;
    if (cols == 0) return AbelianGroup{};

    auto col = [l](std::size_t i, std::size_t j) { return i * l + j; };
    IntMatrix rel;
    auto new_row = [&]() -> std::vector<BigInt>& {
        rel.emplace_back(cols, BigInt(0));
        return rel.back();
    };

    for (const auto& rho : bs.relations) {
        for (std::size_t j = 0; j < l; ++j) {
            auto& row = new_row();
            for (std::size_t i = 0; i < k; ++i) row[col(i, j)] += rho[i];
        }
    }
    for (const auto& sigma : bc.relations) {
        for (std::size_t i = 0; i < k; ++i) {
            auto& row = new_row();
            for (std::size_t j = 0; j < l; ++j) row[col(i, j)] += sigma[j];
        }
    }
    for (Elem r : br.generators) {
        const Elem fr = f(r);
        for (std::size_t i = 0; i < k; ++i) {
            const auto& left = bs.coords[S.mul(bs.generators[i], fr)];
            for (std::size_t j = 0; j < l; ++j) {
                const auto& right = bc.coords[cls[S.mul(fr, reps[bc.generators[j]])]];
                auto& row = new_row();
                for (std::size_t a = 0; a < k; ++a) row[col(a, j)] += left[a];
                for (std::size_t b = 0; b < l; ++b) row[col(i, b)] -= right[b];
            }
        }
    }
    return abelian_group_from_relations(cols, rel);
}

bool is_ring_epimorphism(const RingMorphism& f) { return tensor_cokernel(f).is_trivial(); }

}  // namespace homposet
