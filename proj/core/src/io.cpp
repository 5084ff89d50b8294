#include "mfdr/io.hpp"

#include "mfdr/errors.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace mfdr {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, const char* what)
{
    s = trim(s);
    if (s.empty())
        throw DomainError(std::string("missing ") + what);
    Rational r = parse_rational(s);
    if (r.get_den() != 1 || !r.get_num().fits_sint_p())
        throw DomainError(std::string("malformed ") + what + " '" + std::string(s) + "'");
    return static_cast<int>(r.get_num().get_si());
}

// "key=value key=value"
std::map<std::string, std::string> parse_header(std::string_view line)
{
    std::map<std::string, std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw DomainError("malformed header field '" + tok + "'");
        out[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return out;
}

const std::string& header_field(const std::map<std::string, std::string>& h, const std::string& key)
{
    auto it = h.find(key);
    if (it == h.end())
        throw DomainError("header is missing '" + key + "'");
    return it->second;
}

Rational json_rational(const Json& v)
{
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(v.get<long>());
    throw DomainError("expected a rational as string or integer");
}

} // namespace

std::string series_to_text(const QSeries& s)
{
    std::string out = "valuation=" + std::to_string(s.valuation()) + " trunc=" + std::to_string(s.trunc()) + "\n";
    for (int m = s.valuation(); m < s.trunc(); ++m)
        out += std::to_string(m) + ": " + to_string(s.coeff(m)) + "\n";
    return out;
}

QSeries series_from_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    bool have_header = false;
    int v = 0, t = 0;
    std::map<int, Rational> coeffs;
    while (std::getline(in, line)) {
        auto l = trim(line);
        if (l.empty() || l.front() == '#')
            continue;
        if (!have_header) {
            auto h = parse_header(l);
            v = parse_int(header_field(h, "valuation"), "valuation");
            t = parse_int(header_field(h, "trunc"), "trunc");
            if (v > t)
                throw DomainError("valuation exceeds trunc");
            have_header = true;
            continue;
        }
        auto colon = l.find(':');
        if (colon == std::string_view::npos)
            throw DomainError("malformed series line '" + std::string(l) + "'");
        int m = parse_int(l.substr(0, colon), "exponent");
        if (m < v || m >= t)
            throw DomainError("exponent " + std::to_string(m) + " outside the window");
        if (coeffs.count(m))
            throw DomainError("exponent " + std::to_string(m) + " given twice");
        coeffs[m] = parse_rational(l.substr(colon + 1));
    }
    if (!have_header)
        throw DomainError("series text has no header line");
    std::vector<Rational> dense(static_cast<size_t>(t - v), Rational(0));
    for (auto& [m, c] : coeffs)
        dense[static_cast<size_t>(m - v)] = c;
    return QSeries::from_coeffs(v, std::move(dense), t);
}

Json series_to_json(const QSeries& s)
{
    Json j;
    j["valuation"] = s.valuation();
    j["trunc"] = s.trunc();
    Json c = Json::object();
    for (int m = s.valuation(); m < s.trunc(); ++m)
        c[std::to_string(m)] = to_string(s.coeff(m));
    j["coeffs"] = c;
    return j;
}

QSeries series_from_json(const Json& j)
{
    int v = j.at("valuation").get<int>();
    int t = j.at("trunc").get<int>();
    if (v > t)
        throw DomainError("valuation exceeds trunc");
    std::vector<Rational> dense(static_cast<size_t>(t - v), Rational(0));
    if (j.contains("coeffs")) {
        for (const auto& [key, val] : j.at("coeffs").items()) {
            int m = parse_int(key, "exponent");
            if (m < v || m >= t)
                throw DomainError("exponent " + key + " outside the window");
            dense[static_cast<size_t>(m - v)] = json_rational(val);
        }
    }
    return QSeries::from_coeffs(v, std::move(dense), t);
}

std::string ox_to_text(const OXElement& e)
{
    std::string out = "weight=" + std::to_string(e.weight()) + " denom_pow=" + std::to_string(e.denom_pow()) + "; ";
    const auto& terms = e.numerator().terms();
    if (terms.empty())
        return out + "0";
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (!first)
            out += " + ";
        first = false;
        out += to_string(it->second) + "*u^" + std::to_string(it->first.first) + "*v^"
               + std::to_string(it->first.second);
    }
    return out;
}

OXElement ox_from_text(std::string_view text)
{
    text = trim(text);
    auto semi = text.find(';');
    if (semi == std::string_view::npos)
        throw DomainError("polynomial text needs 'weight=<m> denom_pow=<c>; <terms>'");
    auto h = parse_header(text.substr(0, semi));
    int weight = parse_int(header_field(h, "weight"), "weight");
    int c = parse_int(header_field(h, "denom_pow"), "denom_pow");
    UVPolynomial p;
    std::string body(trim(text.substr(semi + 1)));
    std::istringstream terms(body);
    std::string term;
    while (std::getline(terms, term, '+')) {
        auto t = trim(term);
        if (t.empty())
            throw DomainError("empty term in polynomial text");
        Rational coef = 1;
        int a = 0, b = 0;
        std::istringstream factors{std::string(t)};
        std::string f;
        while (std::getline(factors, f, '*')) {
            auto x = trim(f);
            if (x.empty())
                throw DomainError("empty factor in '" + std::string(t) + "'");
            if (x.front() == 'u' || x.front() == 'v') {
                int e = 1;
                if (x.size() > 1) {
                    if (x[1] != '^')
                        throw DomainError("malformed factor '" + std::string(x) + "'");
                    e = parse_int(x.substr(2), "exponent");
                }
                (x.front() == 'u' ? a : b) += e;
            } else {
                coef *= parse_rational(x);
            }
        }
        p.add_term(a, b, coef);
    }
    return OXElement::make(std::move(p), c, weight);
}

Json ox_to_json(const OXElement& e)
{
    Json j;
    j["weight"] = e.weight();
    j["denom_pow"] = e.denom_pow();
    Json terms = Json::array();
    const auto& t = e.numerator().terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it)
        terms.push_back(Json{{"coeff", to_string(it->second)}, {"u", it->first.first}, {"v", it->first.second}});
    j["terms"] = terms;
    return j;
}

OXElement ox_from_json(const Json& j)
{
    UVPolynomial p;
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("u").get<int>(), t.at("v").get<int>(), json_rational(t.at("coeff")));
    return OXElement::make(std::move(p), j.at("denom_pow").get<int>(), j.at("weight").get<int>());
}

Json section_to_json(const AlgebraicSection& s)
{
    Json j;
    j["degree"] = s.degree();
    j["frame"] = "ST";
    j["base_weight"] = s.base_weight();
    Json c = Json::object();
    for (int jj = 0; jj <= s.degree(); ++jj)
        c[std::to_string(jj) + "," + std::to_string(s.degree() - jj)] = ox_to_json(s.at(jj));
    j["coeffs"] = c;
    return j;
}

Json section_to_json(const SeriesSection& s)
{
    Json j;
    j["degree"] = s.degree();
    j["frame"] = s.frame() == Frame::ST ? "ST" : "AT";
    j["base_weight"] = s.base_weight();
    Json c = Json::object();
    for (int jj = 0; jj <= s.degree(); ++jj)
        c[std::to_string(jj) + "," + std::to_string(s.degree() - jj)] = series_to_json(s.at(jj));
    j["coeffs"] = c;
    return j;
}

AlgebraicSection algebraic_section_from_json(const Json& j)
{
    if (j.at("frame").get<std::string>() != "ST")
        throw DomainError("algebraic sections are stored in the ST frame");
    int n = j.at("degree").get<int>();
    AlgebraicSection s = AlgebraicSection::zero(n, j.at("base_weight").get<int>());
    for (const auto& [key, val] : j.at("coeffs").items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos)
            throw DomainError("section key must be 'j,k'");
        int jj = parse_int(std::string_view(key).substr(0, comma), "j");
        int kk = parse_int(std::string_view(key).substr(comma + 1), "k");
        if (jj + kk != n || jj < 0 || kk < 0)
            throw DomainError("section key " + key + " does not satisfy j + k = n");
        s.set(jj, ox_from_json(val));
    }
    return s;
}

Json class_to_json(const CohClass& c)
{
    Json j;
    j["weight"] = c.weight;
    j["ell"] = c.ell;
    Json coords = Json::object();
    for (int m = -c.ell; m <= c.ell; ++m)
        coords[std::to_string(m)] = to_string(c.rep.coeff(m));
    j["coeffs"] = coords;
    j["rep"] = series_to_json(c.rep);
    if (c.alg_rep)
        j["alg_rep"] = ox_to_json(*c.alg_rep);
    j["certificate"] = Json{{"bol_power", c.weight - 1}, {"g", ox_to_json(c.certificate)}};
    return j;
}

std::string class_to_text(const CohClass& c)
{
    std::string out = "weight=" + std::to_string(c.weight) + " ell=" + std::to_string(c.ell) + "\n";
    for (int m = -c.ell; m <= c.ell; ++m)
        out += "class " + std::to_string(m) + ": " + to_string(c.rep.coeff(m)) + "\n";
    if (c.alg_rep)
        out += "alg_rep: " + ox_to_text(*c.alg_rep) + "\n";
    out += "certificate: D^" + std::to_string(c.weight - 1) + " of " + ox_to_text(c.certificate) + "\n";
    out += series_to_text(c.rep);
    return out;
}

Json pairing_to_json(const PairingValue& p)
{
    return Json{{"value", p.value.get_num().get_str() + "/" + p.value.get_den().get_str()},
                {"convention", std::string(p.convention)}};
}

std::string pairing_to_text(const PairingValue& p)
{
    return p.value.get_num().get_str() + "/" + p.value.get_den().get_str() + "\nconvention="
           + std::string(p.convention) + "\n";
}

std::string complex_to_string(const BigComplex& z, int digits)
{
    std::string im = z.im.to_string(digits);
    if (im.front() != '-')
        im = "+" + im;
    return z.re.to_string(digits) + im + "i";
}

BigComplex parse_complex(std::string_view text, long bits)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        throw DomainError("empty complex number");
    if (s.back() != 'i')
        return {BigFloat(bits, s), BigFloat(bits)};
    s.pop_back();
    size_t split = std::string::npos;
    for (size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    std::string re = split == std::string::npos ? "0" : s.substr(0, split);
    std::string im = split == std::string::npos ? s : s.substr(split);
    if (im.empty() || im == "+")
        im = "1";
    else if (im == "-")
        im = "-1";
    return {BigFloat(bits, re), BigFloat(bits, im)};
}

Json poly_to_json(const ComplexPoly& p, int digits)
{
    Json j;
    j["degree"] = p.degree;
    j["basis"] = "a^j b^(n-j)";
    Json c = Json::array();
    for (int k = 0; k <= p.degree; ++k) {
        const auto& z = p.coeffs[static_cast<size_t>(k)];
        c.push_back(Json{{"j", k}, {"re", z.re.to_string(digits)}, {"im", z.im.to_string(digits)}});
    }
    j["coeffs"] = c;
    return j;
}

std::string poly_to_text(const ComplexPoly& p, int digits)
{
    std::string out = "degree=" + std::to_string(p.degree) + "\n";
    for (int k = 0; k <= p.degree; ++k)
        out += std::to_string(k) + ": " + complex_to_string(p.coeffs[static_cast<size_t>(k)], digits) + "\n";
    return out;
}

} // namespace mfdr
