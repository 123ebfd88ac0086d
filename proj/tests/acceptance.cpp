// Acceptance gate: one pass/fail line per criterion, exact comparisons,
// wall-clock budgets enforced where stated.  Exit 0 iff every criterion passes.

#include <korbit/class_engine.hpp>
#include <korbit/closed_orbits.hpp>
#include <korbit/degeneracy.hpp>
#include <korbit/localization.hpp>
#include <korbit/weak_order.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace korbit;

namespace {

struct GoldenRow {
    const char* cycles;
    int component;
    const char* representative;  // nullptr when not checked
    const char* cls;
};

const std::vector<GoldenRow> kTableOOdd1 = {
    {"(1,3)", 0, nullptr, "-2(x1+x2)(x2+x3)"},
    {"(1,2)", 0, nullptr, "-2(x2+x3)"},
    {"(2,3)", 0, nullptr, "2(x1+x2)"},
    {"id", 0, nullptr, "1"},
};

const std::vector<GoldenRow> kTableOOdd2 = {
    {"(1,5)(2,4)", 0, nullptr, "4(x1+x3)(x3+x5)(x2+x3)(x3+x4)(x1+x2)(x1+x4)"},
    {"(1,5)(3,4)", 0, nullptr, "-4(x1+x2)(x1+x3)(x1+x4)(x2+x3)(x2+x3+x4+x5)"},
    {"(1,4)(2,5)", 0, nullptr, "4(x1+x2)(x1+x3)(x2+x3)(x3+x4)(x3+x5)"},
    {"(1,5)(2,3)", 0, nullptr, "4(x1+x2)(x1+x3)(x1+x4)(x3+x4)(x2+x3+x4+x5)"},
    {"(2,5)(3,4)", 0, nullptr, "-4(x1+x2)(x1+x3)(x2+x3)(x3+x5)"},
    {"(1,4)(3,5)", 0, nullptr, "-4(x1+x2)(x1+x3)(x2+x3)(x2+x3+x4+x5)"},
    {"(1,5)", 0, nullptr, "-2(x1+x2)(x1+x3)(x1+x4)(x2+x3+x4+x5)"},
    {"(1,3)(2,5)", 0, nullptr,
     "4(x1+x2)(x3+x4)"
     "(x3^2+x4^2+x1x2+x1x3+x1x4+x1x5+x2x3+x2x4+x2x5+x3x4+x3x5+x4x5)"},
    {"(1,4)(2,3)", 0, nullptr, "4(x1+x2)(x1+x3)(x1+x3+x4+x5)(x2+x3+x4+x5)"},
    {"(2,4)(3,5)", 0, nullptr, "4(x1+x2)(x1+x3)(x2+x3)"},
    {"(1,3)(4,5)", 0, nullptr, "-4(x1+x2)(x1+x2+x3+x4)(x2+x3+x4+x5)"},
    {"(2,5)", 0, nullptr,
     "-2(x1+x2)(x1x2+x1x3+x1x4+x1x5+x2x3+x2x4+x2x5+x3^2+x3x4+x3x5+x4^2+x4x5)"},
    {"(1,4)", 0, nullptr, "-2(x1+x2)(x1+x3)(x2+x3+x4+x5)"},
    {"(1,2)(3,5)", 0, nullptr,
     "-4(x2^2x3+x2x3^2-x2x4^2-x2x4x5-x3x4^2-x3x4x5-x4^3-x4^2x5"
     "+(x1^2+x1x2)(x2+x3+x4+x5)+x1x3(x2+x3+x4+x5))"},
    {"(1,3)(2,4)", 0, nullptr, "4(x1+x2)(x1+x3+x4+x5)(x2+x3+x4+x5)"},
    {"(2,3)(4,5)", 0, nullptr, "4(x1+x2)(x1+x2+x3+x4)"},
    {"(1,3)", 0, nullptr, "-2(x1+x2)(x2+x3+x4+x5)"},
    {"(1,2)(4,5)", 0, nullptr, "-4(x1+x2+x3+x4)(x2+x3+x4+x5)"},
    {"(2,4)", 0, nullptr, "-2(x1+x2)(x4+x5)"},
    {"(3,5)", 0, nullptr, "-2(x4+x5)(x1+x2+x3+x4)"},
    {"(1,2)(3,4)", 0, nullptr, "4(x4+x5)(x2+x3+x4+x5)"},
    {"(2,3)", 0, nullptr, "2(x1+x2)"},
    {"(4,5)", 0, nullptr, "2(x1+x2+x3+x4)"},
    {"(1,2)", 0, nullptr, "-2(x2+x3+x4+x5)"},
    {"(3,4)", 0, nullptr, "-2(x4+x5)"},
    {"id", 0, nullptr, "1"},
};

const std::vector<GoldenRow> kTableOEven2 = {
    {"(1,4)(2,3)", 0, nullptr, "4x1x2(x1+x2)(x1+x3)"},
    {"(1,3)(2,4)", 0, nullptr, "4x1x2(x1+x2)"},
    {"(1,4)", 0, nullptr, "2x1(x1+x2)(x1+x3)"},
    {"(1,2)(3,4)", 0, nullptr, "4x1(x1+x2+x3)"},
    {"(1,3)", 0, nullptr, "2x1(x1+x2)"},
    {"(2,4)", 0, nullptr, "2(x1+x2)(x1+x2+x3)"},
    {"(1,2)", 0, nullptr, "2x1"},
    {"(3,4)", 0, nullptr, "2(x1+x2+x3)"},
    {"(2,3)", 0, nullptr, "2(x1+x2)"},
    {"id", 0, nullptr, "1"},
};

const std::vector<GoldenRow> kTableSOEven2 = {
    {"(1,4)(2,3)", +1, "<e1, e2, e3, e4>", "2(x1x2+y1y2)(x1+x2)(x1+x3)"},
    {"(1,4)(2,3)", -1, "<e1, e3, e2, e4>", "2(x1x2-y1y2)(x1+x2)(x1+x3)"},
    {"(1,3)(2,4)", +1, "<e1, e2, e4, e3>", "2(x1x2+y1y2)(x1+x2)"},
    {"(1,3)(2,4)", -1, "<e1, e3, e4, e2>", "2(x1x2-y1y2)(x1+x2)"},
    {"(1,4)", 0, "<e1, e2+e3, e2-e3, e4>", "2x1(x1+x2)(x1+x3)"},
    {"(1,2)(3,4)", +1, "<e1, e4, e2, e3>", "2(y1y2+x1^2+x1x2+x1x3)"},
    {"(1,2)(3,4)", -1, "<e1, e4, e3, e2>", "-2(y1y2-x1^2-x1x2-x1x3)"},
    {"(1,3)", 0, "<e1, e2+e3, e4, e2-e3>", "2x1(x1+x2)"},
    {"(2,4)", 0, "<e2+e3, e1, e2-e3, e4>", "2(x1+x2)(x1+x2+x3)"},
    {"(1,2)", 0, "<e1, e4, e2+e3, e2-e3>", "2x1"},
    {"(3,4)", 0, "<e2+e3, e2-e3, e1, e4>", "2(x1+x2+x3)"},
    {"(2,3)", 0, "<e2+e3, e1, e4, e2-e3>", "2(x1+x2)"},
    {"id", 0, "<e1+e4, e1-e4, e2+e3, e2-e3>", "1"},
};

const std::vector<GoldenRow> kTableSp2 = {
    {"(1,4)(2,3)", 0, nullptr, "(x1+x2)(x1+x3)"},
    {"(1,3)(2,4)", 0, nullptr, "x1+x2"},
    {"(1,2)(3,4)", 0, nullptr, "1"},
};

const std::vector<GoldenRow> kTableSp3 = {
    {"(1,6)(2,5)(3,4)", 0, nullptr, "(x1+x2)(x1+x5)(x1+x3)(x1+x4)(x2+x3)(x2+x4)"},
    {"(1,5)(2,6)(3,4)", 0, nullptr, "(x1+x2)(x1+x3)(x1+x4)(x2+x3)(x2+x4)"},
    {"(1,6)(2,4)(3,5)", 0, nullptr, "(x1+x2)(x1+x5)(x1+x3)(x1+x4)(x2+x3)"},
    {"(1,4)(2,6)(3,5)", 0, nullptr, "(x1+x2)(x1+x3)(x2+x3)(x1+x2+x4+x5)"},
    {"(1,5)(2,4)(3,6)", 0, nullptr, "(x1+x2)(x1+x3)(x1+x4)(x2+x3)"},
    {"(1,6)(2,3)(4,5)", 0, nullptr, "(x1+x2)(x1+x5)(x1+x3)(x1+x4)"},
    {"(1,4)(2,5)(3,6)", 0, nullptr, "(x1+x2)(x1+x3)(x2+x3)"},
    {"(1,3)(2,6)(4,5)", 0, nullptr,
     "(x1+x2)(x1^2+x2^2+x1x2+x1x3+x1x4+x1x5+x2x3+x2x4+x2x5+x3x4+x3x5+x4x5)"},
    {"(1,5)(2,3)(4,6)", 0, nullptr, "(x1+x2)(x1+x3)(x1+x4)"},
    {"(1,2)(3,6)(4,5)", 0, nullptr, "(x1+x2+x3+x4)(x1+x2+x3+x5)"},
    {"(1,3)(2,5)(4,6)", 0, nullptr, "(x1+x2)(x1+x2+x3+x4)"},
    {"(1,4)(2,3)(5,6)", 0, nullptr, "(x1+x2)(x1+x3)"},
    {"(1,2)(3,5)(4,6)", 0, nullptr, "x1+x2+x3+x4"},
    {"(1,3)(2,4)(5,6)", 0, nullptr, "x1+x2"},
    {"(1,2)(3,4)(5,6)", 0, nullptr, "1"},
};

const Family kFamilies[] = {Family::O_ODD, Family::O_EVEN, Family::SO_EVEN, Family::SP};

bool check_golden(Family fam, int n, const std::vector<GoldenRow>& rows, std::string& detail) {
    SymmetricPairConfig config(fam, n);
    ClassTable table = compute_classes(config).second;
    if (table.entries.size() != rows.size()) {
        detail = "expected " + std::to_string(rows.size()) + " classes, engine produced " +
                 std::to_string(table.entries.size());
        return false;
    }
    int N = config.ambient();
    for (const auto& row : rows) {
        OrbitParameter param(Permutation::parse(row.cycles, N), row.component);
        auto it = table.entries.find(param);
        if (it == table.entries.end()) {
            detail = "missing orbit " + param.to_string();
            return false;
        }
        if (it->second != Polynomial::parse(row.cls, N, n)) {
            detail = "class mismatch at " + param.to_string();
            return false;
        }
        if (row.representative && representative_display(param, config) != row.representative) {
            detail = "representative mismatch at " + param.to_string();
            return false;
        }
    }
    detail = std::to_string(rows.size()) + " classes exact";
    return true;
}

Polynomial random_polynomial(std::mt19937& rng, int nx, int ny) {
    std::uniform_int_distribution<int> nterms(1, 6), numer(1, 4), denom(1, 2), coin(0, 1);
    Polynomial p(nx, ny);
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> exps(nx + ny, 0);
        std::uniform_int_distribution<int> deg(0, 6), slot(0, nx + ny - 1);
        int total = deg(rng);
        for (int d = 0; d < total; ++d) ++exps[slot(rng)];
        Rational c(coin(rng) ? numer(rng) : -numer(rng), denom(rng));
        p.add_term(exps, c);
    }
    return p;
}

struct Criterion {
    std::string name;
    double budget;  // seconds; 0 means no stated budget
    std::function<bool(std::string&)> body;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"golden classes o-odd n=1", 1.0, [](std::string& d) {
                            return check_golden(Family::O_ODD, 1, kTableOOdd1, d);
                        }});
    criteria.push_back({"golden classes o-odd n=2", 5.0, [](std::string& d) {
                            return check_golden(Family::O_ODD, 2, kTableOOdd2, d);
                        }});
    criteria.push_back({"golden classes o-even n=2", 1.0, [](std::string& d) {
                            return check_golden(Family::O_EVEN, 2, kTableOEven2, d);
                        }});
    criteria.push_back({"golden classes and representatives so-even n=2", 2.0,
                        [](std::string& d) {
                            return check_golden(Family::SO_EVEN, 2, kTableSOEven2, d);
                        }});
    criteria.push_back({"golden classes sp n=2 and n=3", 2.0, [](std::string& d) {
                            std::string d2, d3;
                            bool ok = check_golden(Family::SP, 2, kTableSp2, d2) &&
                                      check_golden(Family::SP, 3, kTableSp3, d3);
                            d = ok ? "18 classes exact" : (d2 + " " + d3);
                            return ok;
                        }});

    criteria.push_back({"closed-orbit localization oracle, all families n<=3", 60.0,
                        [](std::string& d) {
                            std::size_t rows = 0;
                            for (Family fam : kFamilies)
                                for (int n = 1; n <= 3; ++n) {
                                    SymmetricPairConfig config(fam, n);
                                    for (const auto& datum : closed_orbit_classes(config)) {
                                        VerificationReport r = verify_closed_orbit_class(
                                            datum.cls, config, datum.parameter.component);
                                        if (!r.all_pass()) {
                                            d = r.description + ": " +
                                                std::to_string(r.failures()) +
                                                " failing restrictions";
                                            return false;
                                        }
                                        rows += r.rows.size();
                                    }
                                }
                            d = std::to_string(rows) + " restrictions checked";
                            return true;
                        }});

    criteria.push_back({"vanishing outside closure for every class, ambient <= 6", 60.0,
                        [](std::string& d) {
                            std::size_t rows = 0;
                            for (Family fam : kFamilies)
                                for (int n = 1; n <= 3; ++n) {
                                    SymmetricPairConfig config(fam, n);
                                    if (config.ambient() > 6) continue;
                                    ClassTable table = compute_classes(config).second;
                                    for (const auto& [param, cls] : table.entries) {
                                        VerificationReport r = verify_vanishing_outside_closure(
                                            cls, param.involution, config);
                                        if (!r.all_pass()) {
                                            d = r.description + ": " +
                                                std::to_string(r.failures()) + " failures";
                                            return false;
                                        }
                                        rows += r.rows.size();
                                    }
                                }
                            d = std::to_string(rows) + " outside-closure restrictions vanish";
                            return true;
                        }});

    criteria.push_back({"path independence of all derivations, all families n<=3", 0.0,
                        [](std::string& d) {
                            std::size_t edges = 0, mismatches = 0;
                            for (Family fam : kFamilies)
                                for (int n = 1; n <= 3; ++n) {
                                    SymmetricPairConfig config(fam, n);
                                    auto [graph, table] = compute_classes(config);
                                    for (const auto& e : graph.edges) {
                                        Polynomial derived =
                                            table.entries.at(e.source).divided_difference(e.root);
                                        if (e.degree == 2) derived = derived * Rational(1, 2);
                                        ++edges;
                                        if (derived != table.entries.at(e.target)) ++mismatches;
                                    }
                                }
                            d = std::to_string(edges) + " edges re-derived, " +
                                std::to_string(mismatches) + " mismatches";
                            return mismatches == 0;
                        }});

    criteria.push_back(
        {"divided-difference and restriction property suite", 0.0, [](std::string& d) {
             std::mt19937 rng(20260823);
             std::uniform_int_distribution<int> pick_nx(2, 6), pick_ny(0, 2);
             std::size_t poly_count = 0, failures = 0;
             for (int trial = 0; trial < 510; ++trial) {
                 int nx = pick_nx(rng), ny = pick_ny(rng);
                 Polynomial p = random_polynomial(rng, nx, ny);
                 Polynomial q = random_polynomial(rng, nx, ny);
                 poly_count += 2;
                 std::uniform_int_distribution<int> pick_i(1, nx - 1);
                 int i = pick_i(rng);
                 for (const Polynomial* f : {&p, &q}) {
                     if (!f->divided_difference(i).divided_difference(i).is_zero()) ++failures;
                     Polynomial lhs =
                         (Polynomial::x(nx, ny, i) - Polynomial::x(nx, ny, i + 1)) *
                         f->divided_difference(i);
                     if (lhs != *f - f->swap_x(i)) ++failures;
                     if (i + 1 <= nx - 1) {
                         Polynomial a = f->divided_difference(i)
                                            .divided_difference(i + 1)
                                            .divided_difference(i);
                         Polynomial b = f->divided_difference(i + 1)
                                            .divided_difference(i)
                                            .divided_difference(i + 1);
                         if (a != b) ++failures;
                     }
                 }
                 Polynomial leib = (p * q).divided_difference(i);
                 if (leib != p.divided_difference(i) * q + p.swap_x(i) * q.divided_difference(i))
                     ++failures;
             }

             std::vector<SymmetricPairConfig> configs;
             for (Family fam : kFamilies)
                 for (int n = 1; n <= 3; ++n) {
                     SymmetricPairConfig c(fam, n);
                     if (c.ambient() <= 6) configs.push_back(c);
                 }
             std::size_t pair_count = 0;
             for (int trial = 0; trial < 510; ++trial) {
                 std::uniform_int_distribution<std::size_t> pick_c(0, configs.size() - 1);
                 const SymmetricPairConfig& config = configs[pick_c(rng)];
                 auto fps = weyl_K_fixed_points(config);
                 std::uniform_int_distribution<std::size_t> pick_w(0, fps.size() - 1);
                 const Permutation& w = fps[pick_w(rng)];
                 Polynomial p = random_polynomial(rng, config.ambient(), config.rank);
                 Polynomial q = random_polynomial(rng, config.ambient(), config.rank);
                 ++pair_count;
                 if (restrict_at_fixed_point(p * q, w, config) !=
                     restrict_at_fixed_point(p, w, config) * restrict_at_fixed_point(q, w, config))
                     ++failures;
                 if (restrict_at_fixed_point(p + q, w, config) !=
                     restrict_at_fixed_point(p, w, config) + restrict_at_fixed_point(q, w, config))
                     ++failures;
             }
             d = std::to_string(poly_count) + " polynomials, " + std::to_string(pair_count) +
                 " restriction pairs, " + std::to_string(failures) + " failures";
             return failures == 0;
         }});

    criteria.push_back(
        {"structural invariants: counts, dense class, component sums", 0.0, [](std::string& d) {
             struct CountCase {
                 Family fam;
                 int n;
                 std::size_t expected;
             };
             const CountCase counts[] = {{Family::O_ODD, 1, 4},   {Family::O_ODD, 2, 26},
                                         {Family::O_EVEN, 2, 10}, {Family::SO_EVEN, 2, 13},
                                         {Family::SP, 2, 3},      {Family::SP, 3, 15}};
             for (const auto& c : counts) {
                 SymmetricPairConfig config(c.fam, c.n);
                 ClassTable table = compute_classes(config).second;
                 if (table.entries.size() != c.expected) {
                     d = "orbit count for " + family_name(c.fam) + " n=" + std::to_string(c.n) +
                         " is " + std::to_string(table.entries.size()) + ", expected " +
                         std::to_string(c.expected);
                     return false;
                 }
             }
             for (Family fam : kFamilies)
                 for (int n = 1; n <= 3; ++n) {
                     SymmetricPairConfig config(fam, n);
                     ClassTable table = compute_classes(config).second;
                     OrbitParameter dense = table_order(table).back();
                     if (table.entries.at(dense) !=
                         Polynomial::constant(config.ambient(), n, Rational(1))) {
                         d = "dense-orbit class is not 1 for " + family_name(fam) +
                             " n=" + std::to_string(n);
                         return false;
                     }
                 }
             for (int n = 1; n <= 3; ++n) {
                 SymmetricPairConfig so(Family::SO_EVEN, n), o(Family::O_EVEN, n);
                 ClassTable st = compute_classes(so).second;
                 ClassTable ot = compute_classes(o).second;
                 for (const auto& b : enumerate_fpf_involutions(so.ambient())) {
                     Polynomial sum = st.entries.at(OrbitParameter(b, +1)) +
                                      st.entries.at(OrbitParameter(b, -1));
                     if (sum != ot.entries.at(OrbitParameter(b, 0))) {
                         d = "component-sum identity fails at " + b.to_cycles() +
                             ", n=" + std::to_string(n);
                         return false;
                     }
                 }
             }
             d = "counts 4/26/10/13/3/15, dense classes 1, component sums match";
             return true;
         }});

    criteria.push_back(
        {"representative flags realize Gram pattern and rank numbers, n<=3", 0.0,
         [](std::string& d) {
             std::size_t flags = 0;
             for (Family fam : kFamilies)
                 for (int n = 1; n <= 3; ++n) {
                     SymmetricPairConfig config(fam, n);
                     ClassTable table = compute_classes(config).second;
                     for (const auto& [param, cls] : table.entries) {
                         (void)cls;
                         FlagBasis flag =
                             param.component != 0
                                 ? coordinate_flag(component_representative(
                                       param.involution, param.component, config))
                                 : representative_flag(param.involution, config);
                         auto g = gram_matrix(flag, config);
                         ++flags;
                         if (!gram_is_monomial_with_pattern(g, param.involution)) {
                             d = "Gram pattern mismatch at " + param.to_string() + ", " +
                                 family_name(fam) + " n=" + std::to_string(n);
                             return false;
                         }
                         if (!verify_orbit_membership(flag, param.involution, config)) {
                             d = "rank equalities fail at " + param.to_string() + ", " +
                                 family_name(fam) + " n=" + std::to_string(n);
                             return false;
                         }
                     }
                 }
             d = std::to_string(flags) + " flags checked on all rectangles";
             return true;
         }});

    bool all_pass = true;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = false;
        try {
            pass = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (pass && c.budget > 0.0 && sec > c.budget) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
        }
        all_pass = all_pass && pass;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.name << " (" << std::fixed
                  << std::setprecision(2) << sec << "s";
        if (c.budget > 0.0) std::cout << ", budget " << std::setprecision(0) << c.budget << "s";
        std::cout << ")";
        if (!detail.empty()) std::cout << " -- " << detail;
        std::cout << "\n";
    }
    std::cout << (all_pass ? "acceptance: all criteria passed" : "acceptance: FAILURES PRESENT")
              << "\n";
    return all_pass ? 0 : 1;
}
