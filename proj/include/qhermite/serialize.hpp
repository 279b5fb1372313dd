#pragma once

// JSON and LaTeX emitters. Schemas:
//   QScalar  {"num":[c0,c1,...],"den":[d0,d1,...]}   ascending q-degree,
//            canonical form; coefficients are JSON numbers when they fit in
//            64 bits and decimal strings otherwise.
//   XSPoly   {"terms":[{"x":i,"s":j,"coef":<QScalar>},...]} canonical order.
//   ZPoly    {"coeffs":[<XSPoly>,...]} ascending z-degree.
// LaTeX output is stable but not bit-contractual.

#include <string>

#include <json.hpp>

#include "qhermite/families.hpp"
#include "qhermite/identities.hpp"
#include "qhermite/mpoly.hpp"
#include "qhermite/qfield.hpp"

namespace qhermite {

using Json = nlohmann::json;

inline Json to_json(const BigInt& v) {
    if (v.fits_slong_p()) return static_cast<long>(v.get_si());
    return v.get_str();
}

inline BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw Error("expected integer or decimal string");
}

inline Json to_json(const QPolyZ& p) {
    Json arr = Json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(to_json(p.coeff(i)));
    return arr;
}

inline QPolyZ qpoly_from_json(const Json& j) {
    if (!j.is_array()) throw Error("expected coefficient array");
    std::vector<BigInt> c;
    c.reserve(j.size());
    for (const auto& v : j) c.push_back(bigint_from_json(v));
    return QPolyZ(std::move(c));
}

inline Json to_json(const QScalar& v) { return Json{{"num", to_json(v.num())}, {"den", to_json(v.den())}}; }

inline QScalar qscalar_from_json(const Json& j) {
    return QScalar(qpoly_from_json(j.at("num")), qpoly_from_json(j.at("den")));
}

inline Json to_json(const XSPoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(Json{{"x", m.xdeg}, {"s", m.sdeg}, {"coef", to_json(c)}});
    return Json{{"terms", std::move(terms)}};
}

inline XSPoly xspoly_from_json(const Json& j) {
    XSPoly p;
    for (const auto& t : j.at("terms"))
        p += XSPoly::monomial(t.at("x").get<int>(), t.at("s").get<int>(),
                              qscalar_from_json(t.at("coef")));
    return p;
}

inline Json to_json(const ZPoly& p) {
    Json coeffs = Json::array();
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(to_json(p.coeff(i)));
    return Json{{"coeffs", std::move(coeffs)}};
}

inline ZPoly zpoly_from_json(const Json& j) {
    std::vector<XSPoly> c;
    for (const auto& v : j.at("coeffs")) c.push_back(xspoly_from_json(v));
    return ZPoly::from_coeffs(std::move(c));
}

inline Json to_json(const FamilyTable& t) {
    Json entries = Json::array();
    for (const auto& e : t.entries) entries.push_back(to_json(e));
    return Json{{"name", t.name}, {"entries", std::move(entries)}};
}

inline Json to_json(const VerifyReport& r) {
    Json j{{"name", r.name}, {"range", r.range}, {"status", r.pass ? "pass" : "fail"}};
    if (r.witness)
        j["witness"] = Json{{"n", r.witness->n},
                            {"k", r.witness->k},
                            {"lhs", r.witness->lhs},
                            {"rhs", r.witness->rhs}};
    return j;
}

// ---------------------------------------------------------------------------
// LaTeX
// ---------------------------------------------------------------------------

inline std::string latex(const QPolyZ& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        const BigInt& v = p.coeff(i);
        if (v == 0) continue;
        BigInt mag = abs(v);
        std::string term;
        if (i == 0) {
            term = mag.get_str();
        } else {
            if (mag != 1) term = mag.get_str();
            term += i == 1 ? "q" : "q^{" + std::to_string(i) + "}";
        }
        if (out.empty())
            out = (v < 0 ? "-" : "") + term;
        else
            out += (v < 0 ? "-" : "+") + term;
    }
    return out;
}

inline std::string latex(const QScalar& v) {
    if (v.is_polynomial()) return latex(v.num());
    return "\\frac{" + latex(v.num()) + "}{" + latex(v.den()) + "}";
}

namespace detail {
inline std::string latex_coef(const QScalar& c) {
    if (c.is_polynomial()) {
        if (c.is_simple_term()) return latex(c.num());
        if (c.all_coeffs_negative()) return "-\\left(" + latex(-c.num()) + "\\right)";
        return "\\left(" + latex(c.num()) + "\\right)";
    }
    return latex(c);
}
}  // namespace detail

inline std::string latex(const XSPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        std::string mono;
        if (m.sdeg == 1)
            mono = "s";
        else if (m.sdeg > 1)
            mono = "s^{" + std::to_string(m.sdeg) + "}";
        if (m.xdeg == 1)
            mono += "x";
        else if (m.xdeg > 1)
            mono += "x^{" + std::to_string(m.xdeg) + "}";
        std::string term;
        if (mono.empty())
            term = detail::latex_coef(c);
        else if (c.is_one())
            term = mono;
        else if ((-c).is_one())
            term = "-" + mono;
        else
            term = detail::latex_coef(c) + mono;
        if (out.empty())
            out = term;
        else if (!term.empty() && term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

inline std::string latex(const ZPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        XSPoly c = p.coeff(i);
        if (c.is_zero()) continue;
        std::string zmono = i == 0 ? "" : (i == 1 ? "z" : "z^{" + std::to_string(i) + "}");
        std::string term;
        if (zmono.empty()) {
            term = c.term_count() > 1 ? "\\left(" + latex(c) + "\\right)" : latex(c);
        } else if (c.is_one()) {
            term = zmono;
        } else if ((-c).is_one()) {
            term = "-" + zmono;
        } else if (c.term_count() == 1) {
            term = latex(c) + zmono;
        } else if (c.all_terms_negative()) {
            term = "-\\left(" + latex(-c) + "\\right)" + zmono;
        } else {
            term = "\\left(" + latex(c) + "\\right)" + zmono;
        }
        if (out.empty())
            out = term;
        else if (!term.empty() && term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace qhermite
