#include <wcqsym/render.hpp>

#include <map>
#include <vector>

namespace wcqsym
{

using nlohmann::json;

std::string render_index(const WeakComposition &alpha)
{
    return "M[" + format_composition(alpha) + "]";
}

namespace
{

// Appends "term" with the sign convention " + x" / " - x" / leading "-x".
void append_signed(std::string &out, bool negative, const std::string &body)
{
    if (out.empty()) {
        out = negative ? "-" + body : body;
    } else {
        out += (negative ? " - " : " + ") + body;
    }
}

std::string scalar_times(const Rational &mag, const std::string &basis)
{
    return mag == 1 ? basis : mag.get_str() + "*" + basis;
}

// Coefficient polynomial of each index.
std::map<WeakComposition, RatPoly> group_by_index(const QPoly &p)
{
    std::map<WeakComposition, std::vector<Rational>> raw;
    for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
        for (const auto &[alpha, c] : p.coeffs()[d]) {
            auto &v = raw[alpha];
            v.resize(p.coeffs().size());
            v[d] = c;
        }
    }
    std::map<WeakComposition, RatPoly> out;
    for (auto &[alpha, v] : raw) {
        out.emplace(alpha, RatPoly(std::move(v)));
    }
    return out;
}

json fraction_array(const RatPoly &p)
{
    json a = json::array();
    for (const auto &c : p.coeffs()) {
        a.push_back(c.get_str());
    }
    return a;
}

json index_json(const WeakComposition &alpha)
{
    return json(alpha.letters());
}

} // namespace

std::string render_ren(const RenElement &x)
{
    std::string out;
    for (const auto &[alpha, c] : x) {
        append_signed(out, sgn(c) < 0, scalar_times(abs(c), render_index(alpha)));
    }
    return out.empty() ? "0" : out;
}

std::string render_tensor(const RenTensor &x)
{
    std::string out;
    for (const auto &[pair, c] : x) {
        std::string basis = render_index(pair.first) + " (x) " + render_index(pair.second);
        append_signed(out, sgn(c) < 0, scalar_times(abs(c), basis));
    }
    return out.empty() ? "0" : out;
}

std::string render_qpoly(const QPoly &p, bool spaced)
{
    auto groups = group_by_index(p);
    if (groups.empty()) {
        return "0";
    }
    if (groups.size() == 1 && groups.begin()->first.empty()) {
        return format_tpoly(groups.begin()->second, spaced);
    }
    std::string out;
    for (const auto &[alpha, c] : groups) {
        const std::string basis = render_index(alpha);
        if (c.degree() == 0) {
            const Rational &v = c.coeffs()[0];
            append_signed(out, sgn(v) < 0, scalar_times(abs(v), basis));
            continue;
        }
        bool negative = sgn(c.coeffs().back()) < 0;
        append_signed(out, negative, "(" + format_tpoly(negative ? -c : c, false) + ")*" + basis);
    }
    return out;
}

std::string render_series(const QSeries &s)
{
    std::string out;
    for (const auto &[n, c] : s.terms()) {
        if (!out.empty()) {
            out += "; ";
        }
        out += "z^" + std::to_string(n) + ": " + render_qpoly(c, false);
    }
    return out.empty() ? "0" : out;
}

json json_ren(const RenElement &x)
{
    json terms = json::array();
    for (const auto &[alpha, c] : x) {
        terms.push_back({{"coeff", c.get_str()}, {"index", index_json(alpha)}});
    }
    return {{"basis", "M-wc"}, {"terms", terms}};
}

json json_tensor(const RenTensor &x)
{
    json terms = json::array();
    for (const auto &[pair, c] : x) {
        terms.push_back({{"coeff", c.get_str()},
                         {"index", json::array({index_json(pair.first), index_json(pair.second)})}});
    }
    return {{"basis", "M-wc"}, {"terms", terms}};
}

json json_qpoly(const QPoly &p)
{
    json terms = json::array();
    for (const auto &[alpha, c] : group_by_index(p)) {
        terms.push_back({{"coeff", fraction_array(c)}, {"index", index_json(alpha)}});
    }
    return {{"basis", "M-lwc-tpoly"}, {"terms", terms}};
}

json json_series(const QSeries &s)
{
    json terms = json::array();
    for (const auto &[n, c] : s.terms()) {
        for (const auto &[alpha, poly] : group_by_index(c)) {
            terms.push_back({{"z", n}, {"coeff", fraction_array(poly)}, {"index", index_json(alpha)}});
        }
    }
    return {{"basis", "M-lwc-tpoly"}, {"terms", terms}};
}

json json_truncated(const TruncatedSeries &s)
{
    json terms = json::array();
    for (const auto &[m, c] : s.terms()) {
        json idx = json::array();
        for (const auto &[v, e] : m) {
            idx.push_back({v, e});
        }
        terms.push_back({{"coeff", fraction_array(c)}, {"index", idx}});
    }
    return {{"basis", "series"}, {"terms", terms}, {"n_vars", s.n_vars()}};
}

} // namespace wcqsym
