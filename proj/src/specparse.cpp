#include "disklab/specparse.hpp"

#include <algorithm>
#include <cctype>
#include <complex>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace disklab::specparse {

namespace {

struct Token {
    std::string text;
    std::size_t pos;
};

// Split on a delimiter at nesting depth zero ('{','(' open, '}',')' close).
std::vector<Token> split_top(const std::string& s, char delim, std::size_t base) {
    std::vector<Token> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i < s.size() && (s[i] == '{' || s[i] == '(')) ++depth;
        if (i < s.size() && (s[i] == '}' || s[i] == ')')) --depth;
        if (i == s.size() || (s[i] == delim && depth == 0)) {
            out.push_back({s.substr(start, i - start), base + start});
            start = i + 1;
        }
    }
    return out;
}

std::string strip_braces(const std::string& s) {
    if (s.size() >= 2 && s.front() == '{' && s.back() == '}')
        return s.substr(1, s.size() - 2);
    return s;
}

double parse_double(const Token& t) {
    try {
        std::size_t used = 0;
        double v = std::stod(t.text, &used);
        if (used != t.text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw SpecParseError("expected a number, got '" + t.text + "'", t.pos);
    }
}

bool parse_bool(const Token& t) {
    if (t.text == "true" || t.text == "1") return true;
    if (t.text == "false" || t.text == "0") return false;
    throw SpecParseError("expected true/false, got '" + t.text + "'", t.pos);
}

// "a+bi" / "a-bi" / "a" / "bi"
std::complex<double> parse_complex(const Token& t) {
    const std::string& s = t.text;
    if (s.empty()) throw SpecParseError("empty complex literal", t.pos);
    if (s.back() == 'i' || s.back() == 'I') {
        std::string body = s.substr(0, s.size() - 1);
        // Find the sign separating real and imaginary parts (skip a leading
        // sign and exponent signs).
        for (std::size_t i = body.size(); i-- > 1;) {
            if ((body[i] == '+' || body[i] == '-') &&
                body[i - 1] != 'e' && body[i - 1] != 'E') {
                double re = parse_double({body.substr(0, i), t.pos});
                std::string im_str = body.substr(i);
                if (im_str == "+" || im_str == "-") im_str += "1";
                double im = parse_double({im_str, t.pos + i});
                return {re, im};
            }
        }
        if (body.empty() || body == "+") return {0.0, 1.0};
        if (body == "-") return {0.0, -1.0};
        return {0.0, parse_double({body, t.pos})};
    }
    return {parse_double(t), 0.0};
}

struct KeyValues {
    std::map<std::string, Token> kv;
    std::vector<Token> positional;

    Token require(const std::string& key, std::size_t err_pos) const {
        auto it = kv.find(key);
        if (it == kv.end())
            throw SpecParseError("missing required key '" + key + "'", err_pos);
        return it->second;
    }
    double number(const std::string& key, double fallback) const {
        auto it = kv.find(key);
        return it == kv.end() ? fallback : parse_double(it->second);
    }
};

KeyValues parse_args(const std::string& body, std::size_t base) {
    KeyValues out;
    if (body.empty()) return out;
    for (const Token& part : split_top(body, ',', base)) {
        // Split at the first top-level '=' only: values may themselves be
        // nested specs containing '=' (e.g. weight=exp:c=1).
        auto fields = split_top(part.text, '=', part.pos);
        if (fields.size() == 1) {
            out.positional.push_back(fields[0]);
        } else if (fields[0].text.empty()) {
            throw SpecParseError("malformed argument '" + part.text + "'", part.pos);
        } else {
            const std::size_t cut = fields[0].text.size() + 1;
            out.kv.emplace(fields[0].text,
                           Token{part.text.substr(cut), part.pos + cut});
        }
    }
    return out;
}

weights::RadialWeight parse_weight_base(const std::string& head, std::size_t base) {
    auto colon = head.find(':');
    std::string kind = (colon == std::string::npos) ? head : head.substr(0, colon);
    std::string body = (colon == std::string::npos) ? "" : head.substr(colon + 1);
    std::size_t body_pos = base + (colon == std::string::npos ? head.size() : colon + 1);
    KeyValues args = parse_args(body, body_pos);
    using weights::RadialWeight;
    if (kind == "const") return RadialWeight::constant(args.number("c", 1.0));
    if (kind == "std") {
        double gamma = parse_double(args.require("gamma", base));
        bool norm = true;
        if (auto it = args.kv.find("norm"); it != args.kv.end()) norm = parse_bool(it->second);
        return RadialWeight::standard(gamma, norm);
    }
    if (kind == "exp")
        return RadialWeight::exponential(args.number("c", 1.0), args.number("alpha", 1.0),
                                         args.number("l", 1.0));
    if (kind == "dexp") return RadialWeight::double_exponential(args.number("c", 1.0));
    if (kind == "logri") return RadialWeight::log_rapid_increase(args.number("alpha", 2.0));
    if (kind == "table") {
        Token file = args.require("file", base);
        std::ifstream in(file.text);
        if (!in) throw SpecParseError("cannot open table file '" + file.text + "'", file.pos);
        std::vector<double> rs, ws;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::replace(line.begin(), line.end(), ',', ' ');
            std::istringstream ls(line);
            double r, w;
            if (ls >> r >> w) {
                rs.push_back(r);
                ws.push_back(w);
            }
        }
        if (rs.size() < 2)
            throw SpecParseError("table file needs at least two rows", file.pos);
        return RadialWeight::tabulated(rs, ws);
    }
    throw SpecParseError("unknown weight kind '" + kind + "'", base);
}

weights::RadialWeight apply_modifier(const weights::RadialWeight& w, const Token& mod) {
    std::string name = mod.text;
    std::string args;
    auto paren = name.find('(');
    if (paren != std::string::npos) {
        if (name.back() != ')')
            throw SpecParseError("unbalanced parentheses in modifier", mod.pos);
        args = name.substr(paren + 1, name.size() - paren - 2);
        name = name.substr(0, paren);
    }
    KeyValues kv = parse_args(args, mod.pos + paren + 1);
    auto positional = [&](std::size_t i) -> Token {
        if (i >= kv.positional.size())
            throw SpecParseError("modifier '" + name + "' needs more arguments", mod.pos);
        return kv.positional[i];
    };
    if (name == "reg") return w.regularized();
    if (name == "dot") return w.dotted();
    if (name == "flip") return w.boundary_flip();
    if (name == "tilt") return w.tilted(parse_double(positional(0)));
    if (name == "sigma")
        return w.sigma_dual(parse_double(positional(0)), parse_double(positional(1)));
    throw SpecParseError("unknown modifier '~" + name + "'", mod.pos);
}

} // namespace

weights::RadialWeight parse_weight(const std::string& spec) {
    if (spec.empty()) throw SpecParseError("empty weight spec", 0);
    auto parts = split_top(spec, '~', 0);
    weights::RadialWeight w = parse_weight_base(parts[0].text, parts[0].pos);
    for (std::size_t i = 1; i < parts.size(); ++i) w = apply_modifier(w, parts[i]);
    return w;
}

ParsedFunction parse_function(const std::string& spec) {
    if (spec.empty()) throw SpecParseError("empty function spec", 0);
    auto colon = spec.find(':');
    std::string kind = (colon == std::string::npos) ? spec : spec.substr(0, colon);
    std::string body = (colon == std::string::npos) ? "" : spec.substr(colon + 1);
    std::size_t body_pos = (colon == std::string::npos) ? spec.size() : colon + 1;
    using functions::AnalyticFunction;
    if (kind == "poly") {
        std::vector<std::complex<double>> coeffs;
        for (const Token& t : split_top(body, ',', body_pos))
            coeffs.push_back(parse_complex(t));
        if (coeffs.empty()) throw SpecParseError("poly needs coefficients", body_pos);
        return AnalyticFunction::taylor(std::move(coeffs));
    }
    KeyValues args = parse_args(body, body_pos);
    if (kind == "kernel") {
        auto lambda = parse_complex(args.require("lambda", body_pos));
        double beta = parse_double(args.require("beta", body_pos));
        return AnalyticFunction::kernel(lambda, beta);
    }
    if (kind == "momker") {
        auto a = parse_complex(args.require("a", body_pos));
        Token wt = args.require("weight", body_pos);
        auto w = parse_weight(strip_braces(wt.text));
        int n = static_cast<int>(args.number("N", 400));
        return AnalyticFunction::moment_kernel(a, w, n);
    }
    if (kind == "propA" || kind == "propB") {
        Token wt = args.require("weight", body_pos);
        functions::MeasurableTestFunction f{
            kind == "propA" ? functions::MeasurableTestFunction::Family::PropA
                            : functions::MeasurableTestFunction::Family::PropB,
            parse_double(args.require("p", body_pos)),
            parse_double(args.require("q", body_pos)),
            parse_weight(strip_braces(wt.text))};
        return f;
    }
    throw SpecParseError("unknown function kind '" + kind + "'", 0);
}

} // namespace disklab::specparse
