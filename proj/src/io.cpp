#include "rri/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace rri {

namespace {

bool valid_integer_token(const std::string& tok) {
    std::size_t i = tok.size() > 0 && (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    return true;
}

mpz_class parse_integer(const std::string& tok) {
    if (!valid_integer_token(tok)) throw ParseError("invalid integer: '" + tok + "'");
    /* mpz_class's string constructor rejects an explicit plus sign */
    return mpz_class(tok[0] == '+' ? tok.substr(1) : tok);
}

}  // namespace

BigIntPoly parse_coeff_list(const std::string& text) {
    std::istringstream in(text);
    std::vector<mpz_class> coeffs;
    std::string tok;
    while (in >> tok) coeffs.push_back(parse_integer(tok));
    if (coeffs.empty()) throw ParseError("empty coefficient list");
    return BigIntPoly(std::move(coeffs));
}

std::string serialize_coeff_list(const BigIntPoly& f) {
    if (f.is_zero()) return "0\n";
    std::string out;
    for (int i = 0; i <= f.degree(); ++i) {
        if (i > 0) out += ' ';
        out += f.coeff(static_cast<std::size_t>(i)).get_str();
    }
    out += '\n';
    return out;
}

BigIntPoly parse_poly_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("degree") || !doc.contains("coefficients"))
        throw ParseError("polynomial document needs 'degree' and 'coefficients'");
    if (!doc["degree"].is_number_integer())
        throw ParseError("'degree' must be an integer");
    const auto& cs = doc["coefficients"];
    if (!cs.is_array()) throw ParseError("'coefficients' must be an array");
    std::vector<mpz_class> coeffs;
    coeffs.reserve(cs.size());
    for (const auto& c : cs) {
        if (!c.is_string())
            throw ParseError("coefficients must be decimal strings");
        coeffs.push_back(parse_integer(c.get<std::string>()));
    }
    if (coeffs.empty()) throw ParseError("empty coefficient list");
    BigIntPoly f(std::move(coeffs));
    const auto degree = doc["degree"].get<long long>();
    if (degree != f.degree())
        throw ParseError("'degree' does not match the coefficient list");
    return f;
}

std::string serialize_poly_json(const BigIntPoly& f) {
    nlohmann::ordered_json doc;
    doc["degree"] = f.degree();
    auto cs = nlohmann::ordered_json::array();
    for (int i = 0; i <= f.degree(); ++i)
        cs.push_back(f.coeff(static_cast<std::size_t>(i)).get_str());
    doc["coefficients"] = std::move(cs);
    return doc.dump(2) + "\n";
}

nlohmann::ordered_json dyadic_to_json(const Dyadic& d) {
    nlohmann::ordered_json j;
    j["m"] = d.mantissa().get_str();
    j["e"] = d.exponent();
    return j;
}

nlohmann::ordered_json descriptor_to_json(const RootDescriptor& r) {
    nlohmann::ordered_json j;
    if (r.is_point()) {
        j["kind"] = "point";
        j["at"] = dyadic_to_json(r.point());
    } else {
        j["kind"] = "interval";
        j["lower"] = dyadic_to_json(r.interval().lower());
        j["upper"] = dyadic_to_json(r.interval().upper());
    }
    return j;
}

namespace {

nlohmann::ordered_json stats_to_json(const SubdivisionStats& s) {
    nlohmann::ordered_json j;
    j["tree_size"] = s.tree_size;
    j["quadratic_steps"] = s.quadratic_steps;
    j["linear_steps"] = s.linear_steps;
    j["discarded"] = s.discarded;
    j["var_calls"] = s.var_calls;
    j["max_n_exp"] = s.max_n_exp;
    j["max_depth"] = s.max_depth;
    return j;
}

}  // namespace

nlohmann::ordered_json result_to_json(int degree, bool square_free_applied,
                                      const IsolationResult& result, bool with_stats) {
    nlohmann::ordered_json j;
    j["degree"] = degree;
    j["square_free_applied"] = square_free_applied;
    auto roots = nlohmann::ordered_json::array();
    for (const auto& r : result.roots) roots.push_back(descriptor_to_json(r));
    j["roots"] = std::move(roots);
    if (with_stats) j["stats"] = stats_to_json(result.stats);
    return j;
}

std::string render_result_text(int degree, bool square_free_applied,
                               const IsolationResult& result, bool with_stats) {
    std::ostringstream os;
    os << "degree: " << degree << "\n";
    if (square_free_applied) os << "note: replaced input by its square-free part\n";
    os << "roots: " << result.roots.size() << "\n";
    for (const auto& r : result.roots) {
        if (r.is_point())
            os << "  point " << r.point() << "\n";
        else
            os << "  interval " << r.interval() << "\n";
    }
    if (with_stats) {
        const auto& s = result.stats;
        os << "stats: tree_size=" << s.tree_size << " quadratic_steps=" << s.quadratic_steps
           << " linear_steps=" << s.linear_steps << " discarded=" << s.discarded
           << " var_calls=" << s.var_calls << " max_n_exp=" << s.max_n_exp
           << " max_depth=" << s.max_depth << "\n";
    }
    return os.str();
}

}  // namespace rri
