#pragma once

#include "annular.hpp"
#include "graphs.hpp"
#include "linalg.hpp"
#include "series.hpp"
#include "tl.hpp"

#include <json.hpp>

#include <algorithm>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace atl {

using Json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// complex value with rounding residue below 1e-14 (relative) cleared
inline std::complex<double> approximate(const Cyclo& x)
{
    auto z = x.to_complex();
    const double scale = std::max(1.0, std::abs(z)) * 1e-14;
    if (std::abs(z.real()) < scale) z.real(0.0);
    if (std::abs(z.imag()) < scale || x.is_real()) z.imag(0.0);
    return z;
}

inline std::string decimal(const Cyclo& x, int digits = 12)
{
    const auto z = approximate(x);
    auto fmt = [digits](double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", digits, v);
        return std::string(buf);
    };
    if (z.imag() == 0.0) return fmt(z.real());
    const double im = z.imag();
    return fmt(z.real()) + (im < 0 ? " - " : " + ") + fmt(std::abs(im)) + "i";
}

inline std::string show(const Cyclo& x, bool approx) { return approx ? decimal(x) : x.to_string(); }

inline Json to_json(const Cyclo& x, bool approx = false)
{
    if (approx) {
        const auto z = approximate(x);
        return Json{{"re", z.real()}, {"im", z.imag()}};
    }
    if (x.is_rational()) return x.to_rational().get_str();
    Json c = Json::array();
    for (int j = 0; j < x.degree(); ++j) c.push_back(x.coefficient(j).get_str());
    return Json{{"conductor", x.conductor()}, {"coefficients", c}, {"text", x.to_string()}};
}

inline Json to_json(const mpz_class& x) { return x.get_str(); }
inline Json to_json(const mpq_class& x) { return x.get_str(); }

template <class T>
Json to_json_list(const std::vector<T>& xs)
{
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(to_json(x));
    return out;
}

inline Json to_json(const TLDiagram& d) { return Json(d.partners()); }

inline Json to_json(const TLElement<Cyclo>& e, bool approx = false)
{
    Json out = Json::array();
    for (const auto& [d, c] : e.terms()) out.push_back({{"diagram", to_json(d)}, {"coefficient", to_json(c, approx)}});
    return out;
}

inline Json to_json(const AnnularDiagram& d)
{
    Json outer = Json::array(), inner = Json::array();
    for (auto [a, b, w] : d.arcs(true)) outer.push_back({a, b, w});
    for (auto [a, b, w] : d.arcs(false)) inner.push_back({a, b, w});
    Json through = Json::array();
    for (auto [a, b] : d.through_pairs()) through.push_back({a, b});
    return Json{{"outer", d.outer().label()},
                {"inner", d.inner().label()},
                {"outer_arcs", outer},
                {"inner_arcs", inner},
                {"through", through},
                {"offset", d.through_offset()},
                {"circles", d.circles()}};
}

inline Json to_json(const Series& s) { return to_json_list(s.coefficients()); }

inline Json to_json(const Matrix<Cyclo>& m, bool approx = false)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j), approx));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace detail {

inline std::string line_of(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline std::vector<std::string> name_list(const Json& j, const char* field)
{
    if (!j.contains(field)) throw InputError(std::string("missing field '") + field + "'");
    const auto& v = j.at(field);
    if (!v.is_array()) throw InputError(std::string("field '") + field + "' must be an array of names");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_string()) out.push_back(v[i].get<std::string>());
        else if (v[i].is_number_integer()) out.push_back(std::to_string(v[i].get<long>()));
        else throw InputError(std::string("field '") + field + "[" + std::to_string(i) + "]' must be a string or integer");
    }
    return out;
}

inline std::string name_of(const Json& v, const std::string& where)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long>());
    throw InputError("field '" + where + "' must be a string or integer");
}

}  // namespace detail

// {"even": [...], "odd": [...], "edges": [[u, v], ...], "basepoint": name}
inline PointedGraph graph_from_json(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError("malformed graph JSON at " + detail::line_of(text, e.byte > 0 ? e.byte - 1 : 0) + ": " + e.what());
    }
    if (!j.is_object()) throw InputError("graph JSON must be an object");
    const auto even = detail::name_list(j, "even");
    const auto odd = detail::name_list(j, "odd");
    if (!j.contains("edges") || !j.at("edges").is_array()) throw InputError("field 'edges' must be an array of pairs");
    std::vector<std::pair<std::string, std::string>> edges;
    const auto& ej = j.at("edges");
    for (std::size_t i = 0; i < ej.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!ej[i].is_array() || ej[i].size() != 2) throw InputError("field '" + where + "' must be a pair");
        edges.emplace_back(detail::name_of(ej[i][0], where + "[0]"), detail::name_of(ej[i][1], where + "[1]"));
    }
    if (!j.contains("basepoint")) throw InputError("missing field 'basepoint'");
    const auto base = detail::name_of(j.at("basepoint"), "basepoint");
    try {
        return PointedGraph(even, odd, edges, base);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("invalid graph: ") + e.what());
    }
}

inline PointedGraph graph_from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return graph_from_json(ss.str());
}

inline Json to_json(const PointedGraph& g)
{
    Json even = Json::array(), odd = Json::array(), edges = Json::array();
    for (int v = 0; v < g.vertex_count(); ++v) (g.is_even(v) ? even : odd).push_back(g.name(v));
    for (auto [a, b] : g.edges()) edges.push_back({g.name(a), g.name(b)});
    return Json{{"even", even}, {"odd", odd}, {"edges", edges}, {"basepoint", g.name(g.basepoint())}};
}

}  // namespace atl
