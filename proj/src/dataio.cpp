#include "ffmzv/dataio.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ffmzv {

std::string data_dir() {
    if (const char* env = std::getenv("FFMZV_DATA")) return env;
#ifdef FFMZV_SOURCE_DATA_DIR
    return FFMZV_SOURCE_DATA_DIR;
#else
    return "data";
#endif
}

namespace {

struct BivarParser {
    Gf f;
    const std::string& src;
    size_t pos = 0;

    explicit BivarParser(Gf field, const std::string& text) : f(field), src(text) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial syntax error at offset " +
                                    std::to_string(pos) + ": " + what);
    }

    void skip_ws() {
        while (pos < src.size() && (std::isspace(uint8_t(src[pos])) != 0)) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < src.size() && src[pos] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    static TermMap scaled(Gf f, const TermMap& m, uint8_t s) {
        TermMap r;
        if (!s) return r;
        for (auto& [k, v] : m) {
            uint8_t c = f.mul(v, s);
            if (c) r[k] = c;
        }
        return r;
    }
    static void add_into(Gf f, TermMap& m, const TermMap& other, uint8_t scale) {
        for (auto& [k, v] : other) {
            uint8_t c = f.add(m.count(k) ? m[k] : 0, f.mul(v, scale));
            if (c) m[k] = c;
            else m.erase(k);
        }
    }
    static TermMap mul(Gf f, const TermMap& a, const TermMap& b) {
        TermMap r;
        for (auto& [ka, va] : a)
            for (auto& [kb, vb] : b) {
                std::array<int, 4> k = {ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2],
                                        ka[3] + kb[3]};
                uint8_t c = f.add(r.count(k) ? r[k] : 0, f.mul(va, vb));
                if (c) r[k] = c;
                else r.erase(k);
            }
        return r;
    }

    long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && std::isdigit(uint8_t(src[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stol(src.substr(start, pos - start));
    }

    TermMap atom() {
        skip_ws();
        if (pos >= src.size()) fail("unexpected end of input");
        char c = src[pos];
        TermMap t;
        if (c == '(') {
            ++pos;
            t = sum();
            if (!eat(')')) fail("expected ')'");
            return t;
        }
        if (c == 'x' || c == 'y' || c == 'X' || c == 'Y') {
            ++pos;
            std::array<int, 4> k = {0, 0, 0, 0};
            k[c == 'x' ? 0 : (c == 'y' ? 1 : (c == 'X' ? 2 : 3))] = 1;
            t[k] = 1;
            return t;
        }
        if (c == 'w') {
            if (f.q != 4) fail("coefficient w needs q = 4");
            ++pos;
            t[{0, 0, 0, 0}] = 2;
            return t;
        }
        if (std::isdigit(uint8_t(c))) {
            long v = integer();
            uint8_t cf = Poly::norm_coeff(f, int(v % f.q));
            if (f.q == 4 && v > 1) fail("integer coefficients above 1 are ambiguous for q = 4");
            if (cf) t[{0, 0, 0, 0}] = cf;
            return t;
        }
        fail("unexpected character");
    }

    TermMap factor() {
        TermMap base = atom();
        if (eat('^')) {
            long e = integer();
            if (e < 0) fail("negative exponent");
            TermMap acc;
            acc[{0, 0, 0, 0}] = 1;
            TermMap b = base;
            while (e) {
                if (e & 1) acc = mul(f, acc, b);
                e >>= 1;
                if (e) b = mul(f, b, b);
            }
            return acc;
        }
        return base;
    }

    TermMap product() {
        TermMap acc = factor();
        while (true) {
            skip_ws();
            if (eat('*')) {
                acc = mul(f, acc, factor());
                continue;
            }
            // juxtaposition: a factor immediately following (e.g. "x^2 y")
            if (pos < src.size()) {
                char c = src[pos];
                if (c == '(' || c == 'x' || c == 'y' || c == 'X' || c == 'Y' || c == 'w') {
                    acc = mul(f, acc, factor());
                    continue;
                }
            }
            break;
        }
        return acc;
    }

    TermMap sum() {
        TermMap acc;
        bool neg = eat('-');
        if (!neg) eat('+');
        add_into(f, acc, product(), neg ? f.neg(1) : 1);
        while (true) {
            skip_ws();
            if (eat('+')) add_into(f, acc, product(), 1);
            else if (eat('-')) add_into(f, acc, product(), f.neg(1));
            else break;
        }
        return acc;
    }

    TermMap parse() {
        TermMap t = sum();
        skip_ws();
        if (pos != src.size()) fail("trailing input");
        return t;
    }
};

std::vector<BivarTerm> to_terms(const TermMap& m) {
    std::vector<BivarTerm> out;
    out.reserve(m.size());
    for (auto& [k, v] : m) out.push_back(BivarTerm{v, k[0], k[1], k[2], k[3]});
    return out;
}

}  // namespace

TermMap parse_bivar(Gf f, const std::string& expr) { return BivarParser(f, expr).parse(); }

FF parse_ff(const CurveSpec& s, const std::string& num_expr, const std::string& den_expr,
            int off) {
    TermMap num = parse_bivar(s.field, num_expr);
    TermMap den = parse_bivar(s.field, den_expr);
    return ff_from_terms(s, to_terms(num), to_terms(den), off);
}

FFData load_ffunction_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open data file: " + path);
    std::map<std::string, std::string> fields;
    std::string line, key;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        auto colon = line.find(':');
        bool is_key = false;
        std::string head;
        if (colon != std::string::npos) {
            head = line.substr(0, colon);
            is_key = head == "case" || head == "name" || head == "num" || head == "den" ||
                     head == "offset";
        }
        if (is_key) {
            key = head;
            fields[key] += line.substr(colon + 1);
        } else if (!key.empty()) {
            fields[key] += " " + line;
        }
    }
    auto need = [&](const std::string& k) {
        auto it = fields.find(k);
        if (it == fields.end()) throw std::runtime_error(path + ": missing field " + k);
        return it->second;
    };
    auto strip = [](std::string v) {
        size_t b = v.find_first_not_of(" \t\r\n");
        size_t e = v.find_last_not_of(" \t\r\n");
        return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
    };
    FFData d;
    d.curve = strip(need("case"));
    d.name = strip(need("name"));
    int off = fields.count("offset") ? std::stoi(strip(fields["offset"])) : 0;
    const CurveSpec& s = curve_spec(d.curve);
    d.fun = parse_ff(s, need("num"), need("den"), off);
    return d;
}

const CurveSpec& load_curve_spec(const std::string& path_or_json) {
    using nlohmann::json;
    json j;
    if (!path_or_json.empty() && path_or_json[0] == '{') {
        j = json::parse(path_or_json);
    } else {
        std::ifstream in(path_or_json);
        if (!in) throw std::runtime_error("cannot open curve spec: " + path_or_json);
        in >> j;
    }
    CurveSpec s;
    s.id = j.at("id").get<std::string>();
    s.field = Gf{uint8_t(j.at("q").get<int>())};
    if (s.field.q != 2 && s.field.q != 3 && s.field.q != 4)
        throw std::invalid_argument("curve spec: q must be one of 2, 3, 4");
    const auto& rel = j.at("relation");
    s.a = rel.at("a").get<int>();
    std::vector<uint8_t> coeffs;
    for (const auto& c : rel.at("f")) coeffs.push_back(Poly::norm_coeff(s.field, c.get<int>()));
    s.rel = Poly(s.field, std::move(coeffs));
    s.weight_x = j.at("weight_x").get<int>();
    s.weight_y = j.contains("weight_y") && !j.at("weight_y").is_null()
                     ? j.at("weight_y").get<int>()
                     : -1;
    s.spec_offset = j.value("specialization_offset", 0);

    // intern: identical reloads share one stable object
    static std::mutex mu;
    static std::map<std::string, CurveSpec> loaded;
    std::scoped_lock lk(mu);
    std::string key = s.id + "#" + std::to_string(s.field.q);
    auto [it, fresh] = loaded.emplace(key, s);
    if (!fresh && !(it->second == s))
        throw std::invalid_argument("curve spec: conflicting definitions for id " + s.id);
    return it->second;
}

}  // namespace ffmzv
