#ifndef WCQSYM_RENDER_HPP
#define WCQSYM_RENDER_HPP

#include <string>

#include <json.hpp>

#include <wcqsym/qsym.hpp>
#include <wcqsym/regularization.hpp>
#include <wcqsym/renqsym.hpp>

namespace wcqsym
{

// "M[a,b,c]"; the empty composition is "M[]".
std::string render_index(const WeakComposition &alpha);

// Linear combination in the weak-composition M-basis, e.g. "M[1] + 2*M[0,1]".
std::string render_ren(const RenElement &x);

// Tensor terms "M[b] (x) M[c]".
std::string render_tensor(const RenTensor &x);

// Polynomial in t over LWCQSym, grouped by index. A lone M[] term renders as
// the bare t-polynomial (spaced or compact style).
std::string render_qpoly(const QPoly &p, bool spaced);

// "z^-1: ...; z^0: ..." skipping zero coefficients.
std::string render_series(const QSeries &s);

// Machine-readable records: {"basis", "terms", "meta"}.
nlohmann::json json_ren(const RenElement &x);
nlohmann::json json_tensor(const RenTensor &x);
nlohmann::json json_qpoly(const QPoly &p);
nlohmann::json json_series(const QSeries &s);
nlohmann::json json_truncated(const TruncatedSeries &s);

} // namespace wcqsym

#endif
