#include "cycdes/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "cycdes/cyclic.hpp"
#include "cycdes/errors.hpp"
#include "cycdes/exceptional.hpp"
#include "cycdes/gens.hpp"
#include "cycdes/schur.hpp"
#include "cycdes/skew.hpp"

namespace cycdes {

namespace {

std::string mask_str(int n, std::uint32_t mask) { return Subset(n, mask).str(); }

// all compositions of n with at least min_parts parts, lexicographic by parts
void for_compositions(int n, int min_parts,
                      const std::function<void(const Composition&)>& f) {
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            if (static_cast<int>(parts.size()) >= min_parts) f(Composition(parts));
            return;
        }
        for (int p = 1; p <= left; ++p) {
            parts.push_back(p);
            rec(left - p);
            parts.pop_back();
        }
    };
    rec(n);
    (void)min_parts;
}

// all weak compositions of n into exactly k parts, lexicographic
void for_weak_compositions(int n, int k,
                           const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> parts(static_cast<std::size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == k - 1) {
            parts[static_cast<std::size_t>(pos)] = left;
            f(parts);
            return;
        }
        for (int p = 0; p <= left; ++p) {
            parts[static_cast<std::size_t>(pos)] = p;
            rec(pos + 1, left - p);
        }
    };
    if (k > 0) rec(0, n);
}

// --- shape-table checks -------------------------------------------------------

CheckResult route_equality(int max_n, std::int64_t limit) {
    CheckResult r{"fiber-route-equality", true, ""};
    for (int n = 1; n <= max_n; ++n) {
        DegreeContext ctx(n);
        for (const SkewShape& shape : enumerate_skew_shapes(n)) {
            if (shape.is_connected_ribbon()) continue;
            FiberTable a = fiber_table_formula(shape, limit);
            FiberTable b = fiber_table_inner(ctx, shape);
            if (a == b) continue;
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                if (a.at_mask(mask) != b.at_mask(mask)) {
                    r.pass = false;
                    r.detail = "shape " + shape.str() + " J=" + mask_str(n, mask) + ": formula " +
                               std::to_string(a.at_mask(mask)) + " vs inner " +
                               std::to_string(b.at_mask(mask));
                    return r;
                }
            }
        }
    }
    return r;
}

CheckResult builder_axioms(int max_n, std::int64_t limit) {
    CheckResult r{"extension-builder-axioms", true, ""};
    for (int n = 1; n <= max_n; ++n) {
        for (const SkewShape& shape : enumerate_skew_shapes(n)) {
            if (shape.is_connected_ribbon()) {
                try {
                    build_extension(shape, limit);
                    r.pass = false;
                    r.detail = "connected ribbon " + shape.str() + " was accepted";
                    return r;
                } catch (const NotExtendable&) {
                }
                continue;
            }
            CyclicExtension ext = build_extension(shape, limit);
            ValidationReport rep = validate_extension(ext);
            if (!rep.ok) {
                r.pass = false;
                r.detail = "shape " + shape.str() + ": " + rep.detail;
                return r;
            }
            if (!(ext.fiber_counts() == fiber_table_formula(shape, limit))) {
                r.pass = false;
                r.detail = "shape " + shape.str() + ": builder fibers differ from the formula table";
                return r;
            }
        }
    }
    return r;
}

CheckResult sn_decomposition(int max_n, std::int64_t limit) {
    CheckResult r{"sn-cdes-decomposition", true, ""};
    for (int n = 2; n <= std::min(max_n, 9); ++n) {
        if (!check_sn_cdes_distribution(n, limit)) {
            r.pass = false;
            r.detail = "decomposition fails at n=" + std::to_string(n);
            return r;
        }
    }
    return r;
}

CheckResult strip_decompositions(int max_n, std::int64_t limit) {
    CheckResult r{"strip-cdes-decomposition", true, ""};
    for (int n = 2; n <= std::min(max_n, 8); ++n) {
        bool ok = true;
        std::string which;
        for_compositions(n, 2, [&](const Composition& alpha) {
            if (!ok) return;
            if (!check_strip_cdes_distribution(alpha, limit)) {
                ok = false;
                which = alpha.str();
            }
        });
        if (!ok) {
            r.pass = false;
            r.detail = "decomposition fails for composition (" + which + ")";
            return r;
        }
    }
    return r;
}

// --- generating-function checks ------------------------------------------------

CheckResult derivative_relation(int max_n, std::int64_t limit) {
    CheckResult r{"des-cdes-derivative", true, ""};
    for (int n = 2; n <= max_n; ++n) {
        for (const SkewShape& shape : enumerate_skew_shapes(n)) {
            if (shape.is_connected_ribbon()) continue;
            if (!check_des_cdes_derivative(shape, limit)) {
                r.pass = false;
                r.detail = "relation fails for shape " + shape.str();
                return r;
            }
        }
    }
    return r;
}

CheckResult series_identities_check(int max_n, std::int64_t limit) {
    CheckResult r{"descent-series", true, ""};
    for (int n = 2; n <= max_n; ++n) {
        for (const SkewShape& shape : enumerate_skew_shapes(n)) {
            if (shape.is_connected_ribbon()) continue;
            if (!check_series_identities(shape, 2 * n + 4, limit)) {
                r.pass = false;
                r.detail = "series identity fails for shape " + shape.str();
                return r;
            }
        }
    }
    return r;
}

CheckResult eulerian_forms(int max_n) {
    CheckResult r{"eulerian-polynomials", true, ""};
    for (int n = 1; n <= std::min(max_n, 9); ++n) {
        if (!check_carlitz(n, 2 * n + 4)) {
            r.pass = false;
            r.detail = "descent form fails at n=" + std::to_string(n);
            return r;
        }
        if (n >= 2 && !check_cyclic_carlitz(n, 2 * n + 4)) {
            r.pass = false;
            r.detail = "cyclic form fails at n=" + std::to_string(n);
            return r;
        }
    }
    return r;
}

CheckResult multivariate_relations(int max_n) {
    CheckResult r{"multivariate-symmetries", true, ""};
    SnDistributions prev = sn_multivariate(1);
    for (int n = 2; n <= std::min(max_n, 10); ++n) {
        SnDistributions d = sn_multivariate(n);
        struct Sub {
            const char* what;
            bool ok;
        } subs[] = {
            {"top specialization", check_cdes_top_specialization(d)},
            {"rotation sum", check_cdes_rotation_sum(d, prev)},
            {"complement symmetry", check_cdes_complement(d)},
            {"descent recurrence", check_des_recurrence(d, prev)},
            {"bivariate reversal", check_bivariate_reversal(d, prev)},
            {"bivariate operator form", check_bivariate_operator(d, prev)},
        };
        for (const Sub& s : subs) {
            if (!s.ok) {
                r.pass = false;
                r.detail = std::string(s.what) + " fails at n=" + std::to_string(n);
                return r;
            }
        }
        prev = std::move(d);
    }
    return r;
}

// --- exceptional checks ---------------------------------------------------------

CheckResult words_identity(int max_n, std::int64_t limit) {
    CheckResult r{"words-distribution", true, ""};
    for (int n = 2; n <= std::min(max_n, kMaxSubsetN); ++n) {
        for (int m = 1;; ++m) {
            double total = std::pow(static_cast<double>(m), n);
            if (total > 1'000'000.0) break;
            if (!check_words_identity(m, n, limit)) {
                r.pass = false;
                r.detail = "identity fails at m=" + std::to_string(m) + ", n=" + std::to_string(n);
                return r;
            }
        }
    }
    return r;
}

CheckResult escher_symmetric_groups(int max_n) {
    CheckResult r{"escher-symmetric-group", true, ""};
    for (int n = 2; n <= std::min(max_n, 8); n += 2) {
        if (!check_exceptional_sn(n)) {
            r.pass = false;
            r.detail = "construction fails at n=" + std::to_string(n);
            return r;
        }
    }
    return r;
}

CheckResult escher_feasibility(int max_n, std::int64_t limit) {
    CheckResult r{"escher-feasibility", true, ""};
    for (int n = 2; n <= max_n; ++n) {
        for (const SkewShape& shape : enumerate_skew_shapes(n)) {
            std::size_t count = exceptional_feasibility(shape, limit).size();
            std::size_t expected = exceptional_family(shape) ? 1 : 0;
            if (count != expected) {
                r.pass = false;
                r.detail = "shape " + shape.str() + ": " + std::to_string(count) +
                           " feasible fiber tables, expected " + std::to_string(expected);
                return r;
            }
        }
    }
    return r;
}

// --- symmetric-function checks ---------------------------------------------------

CheckResult affine_nonnegativity(int max_n) {
    CheckResult r{"affine-hall-nonnegativity", true, ""};
    for (int n = 1; n <= max_n; ++n) {
        DegreeContext ctx(n);
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            SchurVector v = affine_ribbon_schur(ctx, Subset(n, mask));
            for (int idx = 0; idx < ctx.count(); ++idx) {
                if (ctx.is_hook(idx)) continue;
                if (v.coeff(idx) < 0) {
                    r.pass = false;
                    r.detail = "J=" + mask_str(n, mask) + ", partition " +
                               ctx.partition(idx).str() + ": coefficient " +
                               std::to_string(v.coeff(idx));
                    return r;
                }
            }
        }
    }
    return r;
}

CheckResult negation_symmetry(int max_n, std::int64_t limit) {
    CheckResult r{"negation-symmetry", true, ""};
    for (int n = 1; n <= max_n; ++n) {
        for (const SkewShape& shape : enumerate_skew_shapes(n)) {
            if (shape.is_connected_ribbon()) continue;
            FiberTable ft = fiber_table_formula(shape, limit);
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                std::uint32_t neg = Subset(n, mask).negated().mask();
                if (ft.at_mask(mask) != ft.at_mask(neg)) {
                    r.pass = false;
                    r.detail = "shape " + shape.str() + " J=" + mask_str(n, mask) + ": " +
                               std::to_string(ft.at_mask(mask)) + " vs negated " +
                               std::to_string(ft.at_mask(neg));
                    return r;
                }
            }
        }
    }
    return r;
}

CheckResult hook_pairings(int max_n) {
    CheckResult r{"affine-hook-pairing", true, ""};
    for (int n = 1; n <= max_n; ++n) {
        DegreeContext ctx(n);
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            const int t = std::popcount(mask);
            SchurVector v = affine_ribbon_schur(ctx, Subset(n, mask));
            for (int k = 0; k <= n - 1; ++k) {
                std::int64_t expected = 0;
                if (k <= t - 1) expected = (t - 1 - k) % 2 == 0 ? 1 : -1;
                if (v.coeff(ctx.hook_index(k)) != expected) {
                    r.pass = false;
                    r.detail = "J=" + mask_str(n, mask) + ", k=" + std::to_string(k) + ": got " +
                               std::to_string(v.coeff(ctx.hook_index(k))) + ", expected " +
                               std::to_string(expected);
                    return r;
                }
            }
        }
    }
    return r;
}

CheckResult strip_pairings(int max_n) {
    CheckResult r{"affine-strip-pairing", true, ""};
    for (int n = 2; n <= max_n; ++n) {
        DegreeContext ctx(n);
        std::vector<SchurVector> strips;
        for (int k = 1; k <= n - 1; ++k) {
            strips.push_back(skew_schur(ctx, column_row_sum(n, k)));
        }
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            const int t = std::popcount(mask);
            SchurVector v = affine_ribbon_schur(ctx, Subset(n, mask));
            for (int k = 1; k <= n - 1; ++k) {
                std::int64_t expected = k == t ? 1 : 0;
                std::int64_t got = hall_inner(v, strips[static_cast<std::size_t>(k - 1)]);
                if (got != expected) {
                    r.pass = false;
                    r.detail = "J=" + mask_str(n, mask) + ", k=" + std::to_string(k) + ": got " +
                               std::to_string(got) + ", expected " + std::to_string(expected);
                    return r;
                }
            }
        }
    }
    return r;
}

CheckResult cylindric_enumerator(int max_n, std::int64_t limit) {
    CheckResult r{"cylindric-enumerator", true, ""};
    (void)limit;
    for (int n = 1; n <= std::min(max_n, 8); ++n) {
        DegreeContext ctx(n);
        SchurVector pn = power_sum_hooks(ctx);
        // Kostka row cache: partition index x content -> filling count
        std::map<std::pair<int, std::vector<int>>, std::int64_t> kostka;
        auto kostka_of = [&](int idx, const std::vector<int>& content) {
            auto key = std::make_pair(idx, content);
            auto it = kostka.find(key);
            if (it != kostka.end()) return it->second;
            std::int64_t v = count_ssyt(SkewShape::straight(ctx.partition(idx)), n, content);
            kostka.emplace(key, v);
            return v;
        };
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            Subset j(n, mask);
            SchurVector target = affine_ribbon_schur(ctx, j);
            if (j.size() % 2 == 0) {
                target += pn;
            } else {
                target -= pn;
            }
            std::map<std::vector<int>, std::int64_t> actual;
            for (const SemistandardTableau& t : enumerate_cylindric_tableaux(n, j, n)) {
                ++actual[t.content(n)];
            }
            bool ok = true;
            std::vector<int> bad;
            for_weak_compositions(n, n, [&](const std::vector<int>& gamma) {
                if (!ok) return;
                std::int64_t expected = 0;
                for (int idx = 0; idx < ctx.count(); ++idx) {
                    if (target.coeff(idx) == 0) continue;
                    expected += target.coeff(idx) * kostka_of(idx, gamma);
                }
                auto it = actual.find(gamma);
                std::int64_t got = it == actual.end() ? 0 : it->second;
                if (got != expected) {
                    ok = false;
                    bad = gamma;
                }
            });
            if (!ok) {
                std::ostringstream os;
                os << "J=" << mask_str(n, mask) << ", content (";
                for (std::size_t i = 0; i < bad.size(); ++i) {
                    os << (i ? "," : "") << bad[i];
                }
                os << "): enumerator and expansion differ";
                r.pass = false;
                r.detail = os.str();
                return r;
            }
        }
    }
    return r;
}

CheckResult cylindric_specialized_counts(int max_n, std::int64_t limit) {
    CheckResult r{"cylindric-specialized-counts", true, ""};
    (void)limit;
    for (int n = 1; n <= max_n; ++n) {
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            Subset j(n, mask);
            const int t = j.size();
            bool empty = enumerate_cylindric_tableaux(n, j, t).empty();
            bool interval = false;
            Subset base(n, (1u << t) - 1);
            for (int shift = 0; shift < n; ++shift) {
                if (base.rotated(shift).mask() == mask) {
                    interval = true;
                    break;
                }
            }
            if (empty != interval) {
                r.pass = false;
                r.detail = "J=" + mask_str(n, mask) + ": specialized count " +
                           (empty ? "vanishes" : "is positive") + " but J is " +
                           (interval ? "" : "not ") + "a rotated prefix interval";
                return r;
            }
        }
    }
    return r;
}

CheckResult hook_closed_form(int max_n) {
    CheckResult r{"hook-coefficients-closed-form", true, ""};
    for (int n = 1; n <= max_n; ++n) {
        DegreeContext ctx(n);
        for (const SkewShape& shape : enumerate_skew_shapes(n)) {
            SchurVector v = skew_schur(ctx, shape);
            std::vector<std::int64_t> hm = hook_mults(shape);
            for (int k = 0; k <= n - 1; ++k) {
                if (v.coeff(ctx.hook_index(k)) != hm[static_cast<std::size_t>(k)]) {
                    r.pass = false;
                    r.detail = "shape " + shape.str() + ", k=" + std::to_string(k) + ": expansion " +
                               std::to_string(v.coeff(ctx.hook_index(k))) + " vs closed form " +
                               std::to_string(hm[static_cast<std::size_t>(k)]);
                    return r;
                }
            }
        }
    }
    return r;
}

CheckResult two_hook_identity(int max_n) {
    CheckResult r{"two-hook-sum", true, ""};
    for (int n = 2; n <= max_n; ++n) {
        DegreeContext ctx(n);
        for (int k = 1; k <= n - 1; ++k) {
            if (!sum_of_hooks_identity(ctx, k)) {
                r.pass = false;
                r.detail = "identity fails at n=" + std::to_string(n) + ", k=" + std::to_string(k);
                return r;
            }
        }
    }
    return r;
}

std::vector<CheckResult> suite_theorem1(int max_n, std::int64_t limit) {
    return {route_equality(max_n, limit), builder_axioms(max_n, limit)};
}

std::vector<CheckResult> suite_theorem2(int max_n, std::int64_t limit) {
    return {sn_decomposition(max_n, limit)};
}

std::vector<CheckResult> suite_prop25(int max_n, std::int64_t limit) {
    return {strip_decompositions(max_n, limit)};
}

std::vector<CheckResult> suite_gens(int max_n, std::int64_t limit) {
    return {derivative_relation(max_n, limit), series_identities_check(max_n, limit),
            eulerian_forms(max_n), multivariate_relations(max_n)};
}

std::vector<CheckResult> suite_exceptional(int max_n, std::int64_t limit) {
    return {words_identity(max_n, limit), escher_symmetric_groups(max_n),
            escher_feasibility(max_n, limit)};
}

std::vector<CheckResult> suite_gw(int max_n, std::int64_t limit) {
    return {affine_nonnegativity(max_n),
            negation_symmetry(max_n, limit),
            hook_pairings(max_n),
            strip_pairings(max_n),
            cylindric_enumerator(max_n, limit),
            cylindric_specialized_counts(max_n, limit),
            hook_closed_form(max_n),
            two_hook_identity(max_n)};
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"all", "theorem1", "theorem2", "prop25", "gens", "exceptional", "gw"};
}

std::vector<CheckResult> run_suite(const std::string& suite, int max_n, std::int64_t limit) {
    if (max_n < 1 || max_n > kMaxSubsetN) throw DomainError("size cap must be between 1 and 16");
    if (suite == "theorem1") return suite_theorem1(max_n, limit);
    if (suite == "theorem2") return suite_theorem2(max_n, limit);
    if (suite == "prop25") return suite_prop25(max_n, limit);
    if (suite == "gens") return suite_gens(max_n, limit);
    if (suite == "exceptional") return suite_exceptional(max_n, limit);
    if (suite == "gw") return suite_gw(max_n, limit);
    if (suite == "all") {
        std::vector<CheckResult> out;
        for (const char* s : {"theorem1", "theorem2", "prop25", "gens", "exceptional", "gw"}) {
            std::vector<CheckResult> part = run_suite(s, max_n, limit);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw DomainError("unknown suite '" + suite + "'");
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

}  // namespace cycdes
