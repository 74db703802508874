#include "sympswc/render.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sympswc {

namespace {

std::pair<std::string, std::string> split_index(const std::string& name) {
    std::size_t pos = name.size();
    while (pos > 0 && std::isdigit(static_cast<unsigned char>(name[pos - 1]))) --pos;
    return {name.substr(0, pos), name.substr(pos)};
}

// Appends " + " / " - " (or a leading "-") and returns |c|.
mpz_class emit_sign(std::string& out, const mpz_class& c, bool first) {
    if (first) {
        if (c < 0) out += "-";
    } else {
        out += c < 0 ? " - " : " + ";
    }
    return abs(c);
}

std::vector<std::string> split_terms(const std::string& compact, std::vector<int>& signs) {
    std::vector<std::string> terms;
    std::string cur;
    int sign = 1;
    int depth = 0;
    for (char ch : compact) {
        if (ch == '{' || ch == '(') ++depth;
        if (ch == '}' || ch == ')') --depth;
        if ((ch == '+' || ch == '-') && depth == 0) {
            if (!cur.empty()) {
                terms.push_back(cur);
                signs.push_back(sign);
                cur.clear();
            } else if (!terms.empty() || ch == '+') {
                throw Error(ErrorKind::Parse, "dangling operator in polynomial");
            }
            sign = ch == '-' ? -1 : 1;
            continue;
        }
        cur += ch;
    }
    if (cur.empty()) throw Error(ErrorKind::Parse, "empty polynomial term");
    terms.push_back(cur);
    signs.push_back(sign);
    return terms;
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

std::uint32_t parse_exponent(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw Error(ErrorKind::Parse, "bad exponent '" + s + "'");
    return static_cast<std::uint32_t>(std::stoul(s));
}

}  // namespace

std::vector<std::pair<Monomial, mpz_class>> canonical_terms(const GradedPoly& p) {
    std::vector<std::pair<Monomial, mpz_class>> out(p.terms().begin(), p.terms().end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree != b.first.degree) return a.first.degree < b.first.degree;
        return a.first.exps > b.first.exps;
    });
    return out;
}

std::string to_text(const GradedPoly& p) {
    if (p.is_zero()) return "0";
    const auto& names = p.ring().names();
    std::string out;
    bool first = true;
    for (const auto& [key, c] : canonical_terms(p)) {
        const mpz_class mag = emit_sign(out, c, first);
        first = false;
        std::vector<std::string> factors;
        if (mag != 1 || key.degree == 0) factors.push_back(mag.get_str());
        for (std::size_t i = 0; i < key.exps.size(); ++i) {
            if (key.exps[i] == 0) continue;
            std::string f = names[i];
            if (key.exps[i] > 1) f += "^" + std::to_string(key.exps[i]);
            factors.push_back(f);
        }
        for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
    }
    return out;
}

std::string latex_symbol(const std::string& name) {
    const auto [prefix, index] = split_index(name);
    if (index.empty()) return name;
    if (prefix == "e") return "\\mathfrak{e}_{" + index + "}";
    if (prefix == "E") return "\\mathcal{E}_{" + index + "}";
    if (prefix == "Ex") return "\\mathcal{E}_{" + index + "}(\\mathbf{x})";
    if (prefix == "Ey") return "\\mathcal{E}_{" + index + "}(\\mathbf{y})";
    return prefix + "_{" + index + "}";
}

std::string to_latex(const GradedPoly& p) {
    if (p.is_zero()) return "0";
    const auto& names = p.ring().names();
    std::string out;
    bool first = true;
    for (const auto& [key, c] : canonical_terms(p)) {
        const mpz_class mag = emit_sign(out, c, first);
        first = false;
        if (mag != 1 || key.degree == 0) out += mag.get_str();
        for (std::size_t i = 0; i < key.exps.size(); ++i) {
            if (key.exps[i] == 0) continue;
            out += latex_symbol(names[i]);
            if (key.exps[i] > 1) out += "^{" + std::to_string(key.exps[i]) + "}";
        }
    }
    return out;
}

nlohmann::ordered_json to_json(const GradedPoly& p, std::size_t n) {
    nlohmann::ordered_json j;
    j["n"] = n;
    if (p.cap())
        j["cap"] = *p.cap();
    else
        j["cap"] = nullptr;
    j["weights"] = p.ring().weights();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [key, c] : canonical_terms(p)) {
        nlohmann::ordered_json t;
        t["exp"] = key.exps;
        t["coeff"] = c.get_str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

std::string to_json_string(const GradedPoly& p, std::size_t n) { return to_json(p, n).dump(); }

GradedPoly from_json(const nlohmann::json& j, const RingPtr& ring) {
    try {
        const auto weights = j.at("weights").get<std::vector<unsigned>>();
        if (weights != ring->weights()) throw Error(ErrorKind::Parse, "JSON weights do not match the ring");
        Cap cap;
        if (j.contains("cap") && !j.at("cap").is_null()) cap = j.at("cap").get<Degree>();
        GradedPoly out(ring, cap);
        for (const auto& t : j.at("terms")) {
            const auto exps = t.at("exp").get<Exponents>();
            mpz_class c;
            if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0)
                throw Error(ErrorKind::Parse, "bad coefficient in JSON");
            out.add_term(exps, c);
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("malformed polynomial JSON: ") + e.what());
    }
}

GradedPoly parse_text(const std::string& s, const RingPtr& ring, Cap cap) {
    GradedPoly out(ring, cap);
    const std::string compact = strip_spaces(s);
    if (compact == "0") return out;
    const auto& names = ring->names();
    std::vector<int> signs;
    const auto terms = split_terms(compact, signs);
    for (std::size_t t = 0; t < terms.size(); ++t) {
        mpz_class coeff = signs[t];
        Exponents exps(ring->num_vars(), 0);
        std::stringstream ss(terms[t]);
        std::string factor;
        while (std::getline(ss, factor, '*')) {
            if (!factor.empty() && std::isdigit(static_cast<unsigned char>(factor[0]))) {
                mpz_class c;
                if (c.set_str(factor, 10) != 0) throw Error(ErrorKind::Parse, "bad coefficient '" + factor + "'");
                coeff *= c;
                continue;
            }
            const auto caret = factor.find('^');
            const std::string name = factor.substr(0, caret);
            const auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end()) throw Error(ErrorKind::Parse, "unknown variable '" + name + "'");
            exps[it - names.begin()] += caret == std::string::npos ? 1 : parse_exponent(factor.substr(caret + 1));
        }
        out.add_term(exps, coeff);
    }
    return out;
}

GradedPoly parse_latex(const std::string& s, const RingPtr& ring, Cap cap) {
    GradedPoly out(ring, cap);
    const std::string compact = strip_spaces(s);
    if (compact == "0") return out;

    // Longest symbol first so \mathcal{E}_{1}(\mathbf{x}) wins over \mathcal{E}_{1}.
    std::vector<std::pair<std::string, std::size_t>> symbols;
    for (std::size_t i = 0; i < ring->num_vars(); ++i)
        symbols.emplace_back(strip_spaces(latex_symbol(ring->names()[i])), i);
    std::sort(symbols.begin(), symbols.end(),
              [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });

    std::vector<int> signs;
    const auto terms = split_terms(compact, signs);
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string& term = terms[t];
        std::size_t pos = 0;
        while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) ++pos;
        mpz_class coeff = signs[t];
        if (pos > 0) coeff *= mpz_class(term.substr(0, pos));
        Exponents exps(ring->num_vars(), 0);
        while (pos < term.size()) {
            auto match = std::find_if(symbols.begin(), symbols.end(),
                                      [&](const auto& sym) { return term.compare(pos, sym.first.size(), sym.first) == 0; });
            if (match == symbols.end()) throw Error(ErrorKind::Parse, "unrecognised LaTeX near '" + term.substr(pos) + "'");
            pos += match->first.size();
            std::uint32_t e = 1;
            if (term.compare(pos, 2, "^{") == 0) {
                const auto close = term.find('}', pos);
                if (close == std::string::npos) throw Error(ErrorKind::Parse, "unterminated exponent");
                e = parse_exponent(term.substr(pos + 2, close - pos - 2));
                pos = close + 1;
            }
            exps[match->second] += e;
        }
        out.add_term(exps, coeff);
    }
    return out;
}

}  // namespace sympswc
