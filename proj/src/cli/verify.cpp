#include <wcqsym/verify.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include <wcqsym/birkhoff.hpp>
#include <wcqsym/combinatorics.hpp>
#include <wcqsym/quasi_shuffle.hpp>
#include <wcqsym/regularization.hpp>
#include <wcqsym/render.hpp>
#include <wcqsym/renqsym.hpp>

namespace wcqsym
{

void CheckResult::expect(bool ok, const std::function<std::string()> &describe)
{
    ++cases;
    if (!ok) {
        if (failures == 0) {
            counterexample = describe();
        }
        ++failures;
    }
}

bool SuiteResult::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed(); });
}

const std::vector<std::string> &verify_suite_names()
{
    static const std::vector<std::string> names{"paper-examples", "quasi-shuffle",      "hopf",     "rota-baxter",
                                                "delta-independence", "abf-consistency", "stirling", "bounds"};
    return names;
}

unsigned default_max_size(const std::string &suite)
{
    if (suite == "quasi-shuffle" || suite == "delta-independence") {
        return 4;
    }
    if (suite == "rota-baxter") {
        return 2;
    }
    return 3;
}

std::vector<DirectedWeakComposition> enumerate_directed(std::size_t max_len, std::uint32_t max_upper,
                                                        std::uint32_t max_lower)
{
    std::vector<DirectedWeakComposition> out;
    for (std::size_t len = 1; len <= max_len; ++len) {
        for (const auto &up : enumerate_words(len, 0, max_upper)) {
            for (const auto &low : enumerate_words(len, 1, max_lower)) {
                out.push_back(make_directed(up, low));
            }
        }
    }
    return out;
}

namespace
{

std::string fmt(const WeakComposition &a)
{
    return "(" + format_composition(a) + ")";
}

std::string fmt(const DirectedWeakComposition &d)
{
    return "(" + format_composition(upper_row(d)) + ";" + format_composition(lower_row(d)) + ")";
}

QPoly mono(std::vector<Rational> tcoeffs, const WeakComposition &alpha)
{
    return lift(RatPoly(std::move(tcoeffs))) * QPoly(QSymElement::monomial(alpha));
}

// Pairs of weak compositions with total size at most n.
std::vector<std::pair<WeakComposition, WeakComposition>> pairs_up_to(unsigned n)
{
    std::vector<std::pair<WeakComposition, WeakComposition>> out;
    auto all = enumerate_by_total_size(n, n);
    for (const auto &a : all) {
        for (const auto &b : all) {
            if (total_size(a) + total_size(b) <= n) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

void golden_examples(SuiteResult &r)
{
    CheckResult renorm{"renormalized M golden values"};
    auto check_renorm = [&](const WeakComposition &alpha, const QPoly &want) {
        QPoly got = renormalized_M(alpha);
        renorm.expect(got == want, [&] {
            return "M" + fmt(alpha) + " = " + render_qpoly(got, true) + ", expected " + render_qpoly(want, true);
        });
    };
    const WeakComposition e;
    check_renorm({0}, mono({Rational(-1, 2), -1}, e));
    check_renorm({0, 0}, mono({Rational(3, 8), 1, Rational(1, 2)}, e));
    check_renorm({0, 0, 0}, mono({Rational(-5, 16), Rational(-23, 24), Rational(-3, 4), Rational(-1, 6)}, e));
    for (NatLetter s = 1; s <= 3; ++s) {
        check_renorm({s, 0}, mono({Rational(-3, 2), -1}, {s}) + mono({-1}, {0, s}));
        check_renorm({0, s, 0}, mono({Rational(-5, 2), -1}, {0, s}) + mono({-2}, {0, 0, s}));
        check_renorm({s, 0, 0}, mono({Rational(15, 8), 2, Rational(1, 2)}, {s}) + mono({Rational(5, 2), 1}, {0, s}) +
                                    mono({1}, {0, 0, s}));
    }
    r.checks.push_back(renorm);

    CheckResult zvals{"directional Z golden values"};
    auto check_z = [&](const WeakComposition &a, const WeakComposition &b, const QPoly &want) {
        auto d = make_directed(a, b);
        QPoly got = Z(d);
        zvals.expect(got == want, [&] {
            return "Z" + fmt(d) + " = " + render_qpoly(got, true) + ", expected " + render_qpoly(want, true);
        });
    };
    for (NatLetter x = 1; x <= 3; ++x) {
        check_z({0}, {x}, mono({Rational(-1, 2), -1}, e));
        for (NatLetter s = 1; s <= 2; ++s) {
            check_z({s}, {x}, mono({1}, {s}));
            for (NatLetter y = 1; y <= 3; ++y) {
                check_z({0, s}, {x, y}, mono({1}, {0, s}));
                check_z({s, 0}, {x, y}, mono({Rational(-3, 2), -1}, {s}) + mono({-1}, {0, s}));
            }
        }
    }
    r.checks.push_back(zvals);

    CheckResult phis{"phi((0);(r)) Laurent coefficients"};
    for (NatLetter x = 1; x <= 3; ++x) {
        auto s = phi(make_directed({0}, {x}), -1, 2).series;
        const Rational rr(x);
        std::map<int, RatPoly> want{
            {-1, RatPoly(Rational(-1) / rr)},
            {0, RatPoly(std::vector<Rational>{Rational(-1, 2), -1})},
            {1, RatPoly(std::vector<Rational>{Rational(-1, 12), Rational(-1, 2), Rational(-1, 2)}) * rr},
            {2, RatPoly(std::vector<Rational>{0, Rational(-1, 12), Rational(-1, 4), Rational(-1, 6)}) * Rational(rr * rr)}};
        for (const auto &[n, c] : want) {
            QPoly got = s.coeff(n);
            phis.expect(got == lift(c), [&] {
                return "r=" + std::to_string(x) + " z^" + std::to_string(n) + ": " + render_qpoly(got, false);
            });
        }
    }
    r.checks.push_back(phis);

    CheckResult stir{"Stirling to monomial golden values"};
    auto check_st = [&](const WeakComposition &a, const WeakComposition &b, const QSymElement &want) {
        QSymElement got = stirling_to_M(make_stirling_index(a, b));
        stir.expect(got == want, [&] { return "hatM(" + format_composition(a) + ";" + format_composition(b) + ")"; });
    };
    for (NatLetter s = 1; s <= 2; ++s) {
        check_st({s}, {1}, QSymElement::monomial({0, s}) + QSymElement::monomial({s}));
        check_st({s}, {2},
                 QSymElement::monomial({s}) + QSymElement::monomial({0, s}, 3) + QSymElement::monomial({0, 0, s}, 2));
        check_st({0, s}, {0, 1}, QSymElement::monomial({0, s}, 2) + QSymElement::monomial({0, 0, s}, 2));
        for (NatLetter u = 1; u <= 2; ++u) {
            check_st({s, u}, {1, 1},
                     QSymElement::monomial({0, s, 0, u}) + QSymElement::monomial({0, 0, s, u}, 2) +
                         QSymElement::monomial({0, s, u}, 4) + QSymElement::monomial({s, u}, 2) +
                         QSymElement::monomial({s, 0, u}));
        }
    }
    r.checks.push_back(stir);
}

void quasi_shuffle_suite(SuiteResult &r)
{
    const unsigned n = r.max_size;
    CheckResult comm{"commutativity"}, unit{"unit"}, assoc{"associativity"}, lw{"left weak closure"},
        grading{"grading"}, tpoly{"t-polynomial image is multiplicative"}, oracle{"series oracle product"};
    for (const auto &[a, b] : pairs_up_to(n)) {
        RenElement ab = ren_product(ren_basis(a), ren_basis(b));
        comm.expect(ab == ren_product(ren_basis(b), ren_basis(a)), [&] { return fmt(a) + " * " + fmt(b); });
        bool closed = true;
        bool graded = true;
        std::size_t longest = 0;
        for (const auto &[w, c] : ab) {
            graded = graded && weight(w) == weight(a) + weight(b);
            longest = std::max(longest, w.size());
            if (is_left_weak(a) && is_left_weak(b)) {
                closed = closed && is_left_weak(w);
            }
        }
        lw.expect(closed, [&] { return fmt(a) + " * " + fmt(b); });
        grading.expect(graded, [&] { return fmt(a) + " * " + fmt(b); });
        QPoly ta = to_t_polynomial(a);
        QPoly tb = to_t_polynomial(b);
        QPoly tab = to_t_polynomial(ab);
        tpoly.expect(ta * tb == tab, [&] { return fmt(a) + " * " + fmt(b); });
        auto nv = static_cast<std::uint32_t>(longest + 2);
        oracle.expect(expand(ta, nv) * expand(tb, nv) == expand(tab, nv),
                      [&] { return fmt(a) + " * " + fmt(b) + " in " + std::to_string(nv) + " variables"; });
    }
    for (const auto &a : enumerate_by_total_size(n, n)) {
        unit.expect(ren_product(ren_basis({}), ren_basis(a)) == ren_basis(a), [&] { return fmt(a); });
    }
    auto all = enumerate_by_total_size(n, n);
    for (const auto &a : all) {
        for (const auto &b : all) {
            for (const auto &c : all) {
                if (total_size(a) + total_size(b) + total_size(c) > n) {
                    continue;
                }
                RenElement x = ren_basis(a), y = ren_basis(b), z = ren_basis(c);
                assoc.expect(ren_product(ren_product(x, y), z) == ren_product(x, ren_product(y, z)),
                             [&] { return fmt(a) + " * " + fmt(b) + " * " + fmt(c); });
            }
        }
    }
    r.checks = {comm, unit, assoc, lw, grading, tpoly, oracle};
}

template <class Letter>
void hopf_checks(const std::vector<Word<Letter>> &words, const std::string &label, SuiteResult &r,
                 const std::function<std::string(const Word<Letter> &)> &show)
{
    CheckResult coassoc{"coassociativity over " + label}, counit_law{"counit laws over " + label},
        anti{"antipode identity over " + label}, compat{"coproduct is multiplicative over " + label};
    for (const auto &w : words) {
        // (Delta x id) Delta and (id x Delta) Delta as triples.
        std::map<std::vector<Word<Letter>>, Rational> left, right;
        for (const auto &[p, c] : deconcat_coproduct(w)) {
            for (const auto &[q, e] : deconcat_coproduct(p.first)) {
                left[{q.first, q.second, p.second}] += c * e;
            }
            for (const auto &[q, e] : deconcat_coproduct(p.second)) {
                right[{p.first, q.first, q.second}] += c * e;
            }
        }
        coassoc.expect(left == right, [&] { return show(w); });
        WordComb<Letter> l, rr;
        for (const auto &[p, c] : deconcat_coproduct(w)) {
            l.add(p.second, c * counit(p.first));
            rr.add(p.first, c * counit(p.second));
        }
        counit_law.expect(l == WordComb<Letter>(w) && rr == WordComb<Letter>(w), [&] { return show(w); });
        WordComb<Letter> expected;
        expected.add(Word<Letter>(), counit(w));
        auto s_id = convolve([](const Word<Letter> &u) { return antipode_recursive(u); },
                             [](const Word<Letter> &v) { return WordComb<Letter>(v); }, w);
        auto id_s = convolve([](const Word<Letter> &u) { return WordComb<Letter>(u); },
                             [](const Word<Letter> &v) { return antipode_recursive(v); }, w);
        anti.expect(s_id == expected && id_s == expected, [&] { return show(w); });
    }
    for (const auto &a : words) {
        for (const auto &b : words) {
            if (a.size() + b.size() > 3) {
                continue;
            }
            auto lhs = deconcat_coproduct(qsh_product(WordComb<Letter>(a), WordComb<Letter>(b)));
            auto rhs = tensor_product(deconcat_coproduct(a), deconcat_coproduct(b));
            compat.expect(lhs == rhs, [&] { return show(a) + " * " + show(b); });
        }
    }
    r.checks.insert(r.checks.end(), {coassoc, counit_law, anti, compat});
}

void hopf_suite(SuiteResult &r)
{
    const std::size_t len = r.max_size;
    std::vector<WeakComposition> nat{WeakComposition()};
    for (std::size_t l = 1; l <= len; ++l) {
        auto w = enumerate_words(l, 0, 2);
        nat.insert(nat.end(), w.begin(), w.end());
    }
    hopf_checks<NatLetter>(nat, "N", r, [](const WeakComposition &w) { return fmt(w); });
    std::vector<BiWord> bi{BiWord()};
    for (const auto &d : enumerate_directed(len, 1, 2)) {
        bi.push_back(d);
    }
    hopf_checks<BiLetter>(bi, "N x P", r, [](const BiWord &w) { return fmt(w); });

    CheckResult closed{"closed antipode formula matches recursion"};
    for (const auto &w : nat) {
        closed.expect(ren_antipode(w) == antipode_recursive(w), [&] { return fmt(w); });
    }
    r.checks.push_back(closed);
}

RatPoly random_tpoly(std::mt19937 &rng)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), deg(0, 2);
    std::vector<Rational> c;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) {
        c.emplace_back(num(rng), den(rng));
        c.back().canonicalize();
    }
    return RatPoly(std::move(c));
}

LaurentBlock<Rational> random_laurent(std::mt19937 &rng)
{
    LaurentBlock<Rational> s(-3, 3);
    for (int n = -3; n <= 3; ++n) {
        s.set(n, random_tpoly(rng));
    }
    return s;
}

void rota_baxter_suite(SuiteResult &r)
{
    CheckResult polar{"polar projection, weight -1"}, idem{"polar projection is idempotent"},
        split{"P + (id - P) = id"}, sub{"images of P and id - P are subalgebras"},
        rb{"free operator, weight +1"};
    std::mt19937 rng(20240607);
    for (int i = 0; i < 100; ++i) {
        auto x = random_laurent(rng);
        auto y = random_laurent(rng);
        auto px = polar_projection(x);
        auto py = polar_projection(y);
        auto lhs = px * py;
        auto rhs = polar_projection(x * py) + polar_projection(px * y) - polar_projection(x * y);
        polar.expect(agree(lhs, rhs) && rhs.valid_to() >= 0, [&] { return "random pair " + std::to_string(i); });
        idem.expect(polar_projection(px) == px, [&] { return "random series " + std::to_string(i); });
        split.expect(agree(px + regular_part(x), x), [&] { return "random series " + std::to_string(i); });
        auto pp = px * py;
        auto qq = regular_part(x) * regular_part(y);
        sub.expect(polar_projection(pp) == pp && agree(regular_part(qq), qq),
                   [&] { return "random pair " + std::to_string(i); });
    }
    const unsigned n = r.max_size;
    auto comps = enumerate_by_total_size(n, n);
    for (std::uint32_t m = 0; m <= n; ++m) {
        for (std::uint32_t k = 0; k <= n; ++k) {
            for (const auto &a : comps) {
                for (const auto &b : comps) {
                    RBElement x = rb_basis(m, a), y = rb_basis(k, b);
                    RBElement lhs = rb_product(rb_operator(x), rb_operator(y));
                    RBElement rhs = rb_operator(rb_product(x, rb_operator(y))) +
                                    rb_operator(rb_product(rb_operator(x), y)) + rb_operator(rb_product(x, y));
                    rb.expect(lhs == rhs, [&] {
                        return "x^" + std::to_string(m) + "M" + fmt(a) + ", x^" + std::to_string(k) + "M" + fmt(b);
                    });
                }
            }
        }
    }
    r.checks = {polar, idem, split, sub, rb};
}

void delta_suite(SuiteResult &r)
{
    CheckResult delta{"renormalized M independent of delta"}, match{"agrees with the closed t-polynomial form"},
        classical{"left weak alpha gives classical M"};
    for (const auto &a : enumerate_by_total_size(r.max_size, 4)) {
        QPoly one = renormalized_M(a, 1);
        for (std::uint32_t dl = 2; dl <= 3; ++dl) {
            QPoly other = renormalized_M(a, dl);
            delta.expect(one == other, [&] {
                return fmt(a) + ": delta=1 gives " + render_qpoly(one, true) + ", delta=" + std::to_string(dl) +
                       " gives " + render_qpoly(other, true);
            });
        }
        match.expect(one == to_t_polynomial(a), [&] { return fmt(a); });
        if (is_left_weak(a)) {
            classical.expect(one == QPoly(QSymElement::monomial(a)), [&] { return fmt(a); });
        }
    }
    r.checks = {delta, match, classical};
}

void abf_suite(SuiteResult &r)
{
    CheckResult closed{"recursion equals closed form"}, recomb{"phi = phi_plus * phi_minus^{*-1}"},
        poles{"phi_minus polar, phi_plus regular"};
    for (const auto &d : enumerate_directed(r.max_size, 2, 2)) {
        const int zmax = static_cast<int>(d.size());
        auto rec = abf(d, zmax);
        auto cf = abf_closed_form(d, zmax);
        closed.expect(rec.phi_minus == cf.phi_minus && agree(rec.phi_plus, cf.phi_plus) &&
                          rec.phi_plus.valid_to() == cf.phi_plus.valid_to(),
                      [&] { return fmt(d); });
        auto back = recombine(d, zmax);
        auto ref = phi_series(d, zmax);
        recomb.expect(agree(back, ref) && std::min(back.valid_to(), ref.valid_to()) >= 0, [&] { return fmt(d); });
        bool ok = true;
        for (const auto &[e, c] : rec.phi_minus.terms()) {
            ok = ok && e < 0;
        }
        ok = ok && rec.phi_plus.pole_order() == 0;
        poles.expect(ok, [&] { return fmt(d); });
    }
    r.checks = {closed, recomb, poles};
}

Integer stirling2_row(std::uint32_t n, std::uint32_t k)
{
    std::vector<std::vector<Integer>> s(n + 1, std::vector<Integer>(n + 1, 0));
    s[0][0] = 1;
    for (std::uint32_t i = 1; i <= n; ++i) {
        for (std::uint32_t j = 1; j <= i; ++j) {
            s[i][j] = Integer(j) * s[i - 1][j] + s[i - 1][j - 1];
        }
    }
    return k <= n ? s[n][k] : Integer(0);
}

void stirling_suite(SuiteResult &r)
{
    CheckResult single{"single row gives i! S(m+1,i+1)"}, routes{"enumeration equals inclusion-exclusion"},
        placement{"count independent of placement"}, counting{"counting identity"};
    for (std::uint32_t m = 0; m <= 6; ++m) {
        for (std::uint32_t i = 0; i <= m; ++i) {
            Integer want = factorial(i) * stirling2_row(m + 1, i + 1);
            single.expect(count_filtered_pointed({m}, {i}) == want && stirling_coefficient({m}, {i}) == want,
                          [&] { return "m=" + std::to_string(m) + " i=" + std::to_string(i); });
        }
    }
    const std::size_t kmax = r.max_size;
    for (std::size_t k = 1; k <= kmax; ++k) {
        for (const auto &beta : enumerate_words(k, 0, 3)) {
            std::vector<std::uint32_t> tail(k + 1, 0);
            for (std::size_t j = k; j-- > 0;) {
                tail[j] = tail[j + 1] + beta[j];
            }
            std::vector<WeakComposition> admissible;
            for (const auto &I : enumerate_words(k, 0, tail[0])) {
                if (satisfies_tail_condition(beta, I)) {
                    admissible.push_back(I);
                }
            }
            for (const auto &I : admissible) {
                Integer a = count_filtered_pointed(beta, I, 0);
                Integer b = count_filtered_pointed(beta, I, 1);
                Integer c = count_filtered_pointed(beta, I, 2);
                placement.expect(a == b && b == c, [&] { return "beta=" + fmt(beta) + " I=" + fmt(I); });
                routes.expect(a == stirling_coefficient(beta, I), [&] { return "beta=" + fmt(beta) + " I=" + fmt(I); });
            }
            // n_1 < ... < n_k <= 8
            for (const auto &nn : enumerate_words(k, 1, 8)) {
                if (!std::is_sorted(nn.begin(), nn.end()) ||
                    std::adjacent_find(nn.begin(), nn.end()) != nn.end()) {
                    continue;
                }
                Integer lhs = 1;
                for (std::size_t j = 0; j < k; ++j) {
                    Integer p;
                    mpz_ui_pow_ui(p.get_mpz_t(), nn[j], beta[j]);
                    lhs *= p;
                }
                Integer rhs = 0;
                for (const auto &I : admissible) {
                    Integer term = stirling_coefficient(beta, I);
                    std::uint32_t prev = 0;
                    for (std::size_t j = 0; j < k; ++j) {
                        term *= binomial(static_cast<std::int64_t>(nn[j]) - prev - 1, I[j]);
                        prev = nn[j];
                    }
                    rhs += term;
                }
                counting.expect(lhs == rhs, [&] { return "beta=" + fmt(beta) + " n=" + fmt(nn); });
            }
        }
    }
    r.checks = {single, routes, placement, counting};
}

void bounds_suite(SuiteResult &r)
{
    CheckResult pole{"pole order at most k - j"}, free{"left weak upper row gives no pole"},
        tdeg{"t-degree of z^m coefficient at most m + 2(k - j)"}, sharp{"t-degree of z^m coefficient at most m + (k - j)"},
        fact{"factorized phi equals phi"};
    for (const auto &d : enumerate_directed(r.max_size, 2, 2)) {
        const int k = static_cast<int>(d.size());
        auto s = phi(d, -k, k).series;
        const int pb = static_cast<int>(pole_bound(d));
        pole.expect(s.pole_order() <= pb, [&] { return fmt(d); });
        if (is_left_weak(upper_row(d))) {
            free.expect(s.pole_order() == 0, [&] { return fmt(d); });
        }
        int excess = t_degree_excess(s);
        tdeg.expect(excess <= 2 * pb, [&] { return fmt(d); });
        sharp.expect(excess <= pb, [&] { return fmt(d) + " excess " + std::to_string(excess); });
        fact.expect(phi_factorized(d, -k, k).series == s, [&] { return fmt(d); });
    }
    r.checks = {pole, free, tdeg, sharp, fact};
}

} // namespace

SuiteResult run_verify_suite(const std::string &suite, std::optional<unsigned> max_size)
{
    const auto &names = verify_suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    SuiteResult r;
    r.suite = suite;
    r.max_size = max_size.value_or(default_max_size(suite));
    if (suite == "paper-examples") {
        golden_examples(r);
    } else if (suite == "quasi-shuffle") {
        quasi_shuffle_suite(r);
    } else if (suite == "hopf") {
        hopf_suite(r);
    } else if (suite == "rota-baxter") {
        rota_baxter_suite(r);
    } else if (suite == "delta-independence") {
        delta_suite(r);
    } else if (suite == "abf-consistency") {
        abf_suite(r);
    } else if (suite == "stirling") {
        stirling_suite(r);
    } else {
        bounds_suite(r);
    }
    return r;
}

} // namespace wcqsym
