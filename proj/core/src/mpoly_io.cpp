#include "modulilab/mpoly_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace modulilab::algebra {

namespace {

std::string monomial_text(const std::vector<std::string>& vars, const Exponents& e) {
    std::string s;
    for (size_t i = 0; i < vars.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += vars[i];
        if (e[i] > 1) s += '^' + std::to_string(e[i]);
    }
    return s;
}

bool looks_like_rational(const std::string& tok) {
    return !tok.empty() && (std::isdigit(static_cast<unsigned char>(tok[0])) || tok[0] == '-');
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::string to_string(const MPoly<Rat>& p) {
    if (p.is_zero_poly()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        const bool neg = c < 0;
        const Rat mag = neg ? Rat(-c) : c;
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        const std::string mon = monomial_text(p.variables(), e);
        if (mon.empty()) {
            out += rat_to_string(mag);
        } else if (mag == 1) {
            out += mon;
        } else {
            out += rat_to_string(mag) + '*' + mon;
        }
    }
    return out;
}

MPoly<Rat> mpoly_from_string(const std::vector<std::string>& vars, const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty()) throw std::invalid_argument("empty polynomial text");
    if (tokens.size() == 1 && tokens[0] == "0") return MPoly<Rat>(vars);

    MPoly<Rat> result(vars);
    bool expect_term = true;
    bool negate = false;
    for (const auto& tok : tokens) {
        if (!expect_term) {
            if (tok == "+") negate = false;
            else if (tok == "-") negate = true;
            else throw std::invalid_argument("expected '+' or '-', got: " + tok);
            expect_term = true;
            continue;
        }
        std::string body = tok;
        bool term_neg = negate;
        if (body[0] == '-') {
            term_neg = !term_neg;
            body.erase(0, 1);
        }
        Rat coef(1);
        Exponents e(vars.size(), 0);
        bool saw_coef = false;
        for (const auto& part : split(body, '*')) {
            if (part.empty()) throw std::invalid_argument("malformed term: " + tok);
            if (looks_like_rational(part)) {
                if (saw_coef) throw std::invalid_argument("two coefficients in term: " + tok);
                coef = rat_from_string(part);
                saw_coef = true;
                continue;
            }
            const auto caret = part.find('^');
            const std::string name = part.substr(0, caret);
            unsigned exp = 1;
            if (caret != std::string::npos) {
                const std::string rest = part.substr(caret + 1);
                if (rest.empty()) throw std::invalid_argument("missing exponent in: " + part);
                exp = static_cast<unsigned>(std::stoul(rest));
            }
            const auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end()) throw std::invalid_argument("unknown variable: " + name);
            e[static_cast<size_t>(it - vars.begin())] += exp;
        }
        if (term_neg) coef = -coef;
        MPoly<Rat> term = MPoly<Rat>::constant(vars, coef);
        for (size_t i = 0; i < vars.size(); ++i)
            if (e[i] > 0) term = term * MPoly<Rat>::variable(vars, vars[i], Rat(1)).pow(e[i]);
        result = result + term;
        expect_term = false;
        negate = false;
    }
    if (expect_term) throw std::invalid_argument("dangling sign in polynomial text");
    return result;
}

nlohmann::json mpoly_to_json(const MPoly<Rat>& p) {
    nlohmann::json j;
    j["vars"] = p.variables();
    j["terms"] = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        j["terms"].push_back({{"exp", e}, {"coef", rat_to_string(c)}});
    }
    return j;
}

MPoly<Rat> mpoly_from_json(const nlohmann::json& j) {
    if (!j.contains("vars") || !j.contains("terms"))
        throw std::invalid_argument("polynomial JSON needs 'vars' and 'terms'");
    const std::vector<std::string> vars = j["vars"].get<std::vector<std::string>>();
    MPoly<Rat> result(vars);
    for (const auto& t : j["terms"]) {
        const Exponents e = t.at("exp").get<Exponents>();
        if (e.size() != vars.size())
            throw std::invalid_argument("exponent arity does not match variable list");
        const Rat c = rat_from_string(t.at("coef").get<std::string>());
        MPoly<Rat> mon = MPoly<Rat>::constant(vars, c);
        for (size_t i = 0; i < vars.size(); ++i)
            if (e[i] > 0) mon = mon * MPoly<Rat>::variable(vars, vars[i], Rat(1)).pow(e[i]);
        result = result + mon;
    }
    return result;
}

}  // namespace modulilab::algebra
