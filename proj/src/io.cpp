#include "cocycle/io.hpp"

#include <cstdio>
#include <deque>
#include <fstream>
#include <sstream>

namespace cocycle {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

int64_t parse_int(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        int64_t v = std::stoll(s, &used);
        if (used != s.size()) throw InputError("");
        return v;
    } catch (const std::exception&) {
        throw InputError("expected an integer for " + what + ", got '" + s + "'");
    }
}

int small_int(int64_t v, int lo, int hi, const std::string& what) {
    if (v < lo || v > hi)
        throw InputError(what + " must be in " + std::to_string(lo) + ".." + std::to_string(hi));
    return int(v);
}

FiniteGroup group_factor(const std::string& raw) {
    std::string f = trim(raw);
    auto colon = f.find(':');
    std::string name = colon == std::string::npos ? f : f.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : f.substr(colon + 1);
    auto need_arg = [&](const std::string& what) {
        if (arg.empty()) throw InputError("group factor '" + f + "' needs " + what);
        return parse_int(arg, "group factor '" + f + "'");
    };
    if (name == "quaternion" || name == "Q8") return make_quaternion();
    if (name == "klein" || name == "V4") return make_product(make_cyclic(2), make_cyclic(2));
    if (name == "cyclic") return make_cyclic(small_int(need_arg("an order"), 1, 4096, "cyclic order"));
    if (name == "dihedral") return make_dihedral(small_int(need_arg("n"), 1, 2048, "dihedral n"));
    if (name == "symmetric") return make_symmetric(small_int(need_arg("a degree"), 1, 6, "symmetric degree"));
    if (name.size() > 1 && colon == std::string::npos) {
        std::string num = name.substr(1);
        switch (name[0]) {
            case 'Z': return make_cyclic(small_int(parse_int(num, "Zm"), 1, 4096, "cyclic order"));
            case 'D': return make_dihedral(small_int(parse_int(num, "Dn"), 1, 2048, "dihedral n"));
            case 'S': return make_symmetric(small_int(parse_int(num, "Sn"), 1, 6, "symmetric degree"));
            default: break;
        }
    }
    throw InputError("unknown group '" + f + "'");
}

IntMat matrix_from_json(const Json& j, int d) {
    if (!j.is_array() || int(j.size()) != d) throw InputError("action matrix must have " + std::to_string(d) + " rows");
    IntMat M;
    for (const auto& row : j) {
        if (!row.is_array() || int(row.size()) != d)
            throw InputError("action matrix rows must have " + std::to_string(d) + " entries");
        Vec r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw InputError("action matrix entries must be integers");
            r.push_back(x.get<int64_t>());
        }
        M.push_back(r);
    }
    return M;
}

Vec value_from_json(const Json& v, int d) {
    if (v.is_number_integer()) {
        if (d != 1) throw InputError("cochain value needs " + std::to_string(d) + " coordinates");
        return {v.get<int64_t>()};
    }
    if (!v.is_array() || int(v.size()) != d) throw InputError("cochain value needs " + std::to_string(d) + " coordinates");
    Vec out;
    for (const auto& x : v) {
        if (!x.is_number_integer()) throw InputError("cochain coordinates must be integers");
        out.push_back(x.get<int64_t>());
    }
    return out;
}

std::string tuple_key(const std::vector<int>& args) {
    std::string key;
    for (size_t i = 0; i < args.size(); ++i) key += (i ? "," : "") + std::to_string(args[i]);
    return key;
}

}  // namespace

Json read_json_argument(const std::string& text) {
    std::string t = trim(text);
    try {
        if (!t.empty() && t[0] == '@') {
            std::ifstream in(t.substr(1));
            if (!in) throw InputError("cannot open " + t.substr(1));
            return Json::parse(in);
        }
        return Json::parse(t);
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

FiniteGroup group_from_json(const Json& j) {
    if (j.is_string()) return parse_group(j.get<std::string>());
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw InputError("group descriptor needs a string field 'type'");
    const std::string type = j["type"];
    auto field = [&](const char* name) -> int64_t {
        if (!j.contains(name) || !j[name].is_number_integer())
            throw InputError("group descriptor of type " + type + " needs integer '" + name + "'");
        return j[name].get<int64_t>();
    };
    if (type == "cyclic") return make_cyclic(small_int(field("order"), 1, 4096, "cyclic order"));
    if (type == "dihedral") return make_dihedral(small_int(field("n"), 1, 2048, "dihedral n"));
    if (type == "quaternion") return make_quaternion();
    if (type == "symmetric") return make_symmetric(small_int(field("degree"), 1, 6, "symmetric degree"));
    if (type == "product") {
        if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].empty())
            throw InputError("product descriptor needs a non-empty 'factors' array");
        FiniteGroup G = group_from_json(j["factors"][0]);
        for (size_t i = 1; i < j["factors"].size(); ++i) G = make_product(G, group_from_json(j["factors"][i]));
        return G;
    }
    if (type == "table") {
        if (!j.contains("table")) throw InputError("table descriptor needs 'table'");
        try {
            return FiniteGroup(j["table"].get<std::vector<std::vector<int>>>());
        } catch (const Json::exception&) {
            throw InputError("group table must be a square array of integers");
        }
    }
    throw InputError("unknown group type '" + type + "'");
}

FiniteGroup parse_group(const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) throw InputError("empty group descriptor");
    if (t[0] == '{' || t[0] == '@') return group_from_json(read_json_argument(t));
    auto factors = split(t, 'x');
    FiniteGroup G = group_factor(factors[0]);
    for (size_t i = 1; i < factors.size(); ++i) G = make_product(G, group_factor(factors[i]));
    return G;
}

AbelianGroup module_from_json(const Json& j) {
    if (j.is_string()) return parse_module(j.get<std::string>());
    if (!j.is_object()) throw InputError("module descriptor must be an object or a string");
    int rank = 0;
    Vec torsion;
    if (j.contains("rank")) {
        if (!j["rank"].is_number_integer()) throw InputError("module rank must be an integer");
        rank = small_int(j["rank"].get<int64_t>(), 0, 64, "module rank");
    }
    if (j.contains("torsion")) {
        if (!j["torsion"].is_array()) throw InputError("module torsion must be an array");
        for (const auto& m : j["torsion"]) {
            if (!m.is_number_integer()) throw InputError("torsion orders must be integers");
            torsion.push_back(m.get<int64_t>());
        }
    }
    return AbelianGroup(rank, torsion);
}

AbelianGroup parse_module(const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) throw InputError("empty module descriptor");
    if (t[0] == '{' || t[0] == '@') return module_from_json(read_json_argument(t));
    if (t == "zero") return AbelianGroup(0, {});
    int rank = 0;
    Vec torsion;
    for (const auto& term : split(t, '+')) {
        auto colon = term.find(':');
        if (colon == std::string::npos) throw InputError("module term '" + term + "' needs the form kind:values");
        std::string kind = term.substr(0, colon), rest = term.substr(colon + 1);
        if (kind == "free") {
            rank += small_int(parse_int(rest, "free rank"), 0, 64, "module rank");
        } else if (kind == "torsion" || kind == "cyclic") {
            for (const auto& m : split(rest, ',')) {
                int64_t v = parse_int(m, "torsion order");
                if (v < 2) throw InputError("torsion orders must be at least 2");
                torsion.push_back(v);
            }
        } else {
            throw InputError("unknown module term '" + kind + "'");
        }
    }
    return AbelianGroup(rank, torsion);
}

std::shared_ptr<const GAction> parse_action(const FiniteGroup& G, const AbelianGroup& A, const std::string& text) {
    std::string t = trim(text);
    if (t.empty() || t == "trivial") return std::make_shared<const GAction>(GAction::trivial(G, A));
    Json j = read_json_argument(t);
    const int d = A.dim();
    std::vector<IntMat> mats;
    if (j.is_array()) {
        if (int(j.size()) != G.order()) throw InputError("action needs one matrix per group element");
        for (const auto& m : j) mats.push_back(matrix_from_json(m, d));
    } else if (j.is_object() && j.contains("generators") && j["generators"].is_object()) {
        std::vector<std::pair<int, IntMat>> gens;
        for (const auto& [key, m] : j["generators"].items()) {
            int g = small_int(parse_int(key, "generator index"), 0, G.order() - 1, "generator index");
            gens.emplace_back(g, matrix_from_json(m, d));
        }
        // Breadth-first closure: S(x g) = S(x) S(g).
        std::vector<std::optional<IntMat>> known(size_t(G.order()));
        known[0] = identity_matrix(d);
        std::deque<int> queue{0};
        const Vec mod = A.moduli();
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (const auto& [g, M] : gens) {
                int y = G.mul(x, g);
                IntMat P = matmul(*known[x], M, mod);
                if (!known[y]) {
                    known[y] = P;
                    queue.push_back(y);
                } else if (*known[y] != P) {
                    throw InputError("generator matrices do not define a homomorphism (element " +
                                     std::to_string(y) + ")");
                }
            }
        }
        for (int g = 0; g < G.order(); ++g) {
            if (!known[g]) throw InputError("action generators do not generate the group");
            mats.push_back(*known[g]);
        }
    } else {
        throw InputError("action must be 'trivial', an array of matrices or {\"generators\": {...}}");
    }
    auto S = std::make_shared<const GAction>(G, A, mats);
    if (auto err = S->check()) throw InputError("invalid action: " + *err);
    return S;
}

Cochain cochain_from_json(std::shared_ptr<const GAction> S, int p, const Json& j) {
    Cochain c(S, p);
    if (j.is_null()) return c;
    if (!j.is_object()) throw InputError("cochain must be an object mapping \"g1,...,gp\" to values");
    const int order = S->group().order();
    for (const auto& [key, value] : j.items()) {
        std::vector<int> args;
        for (const auto& part : split(key, ','))
            args.push_back(small_int(parse_int(part, "cochain argument"), 0, order - 1, "cochain argument"));
        if (int(args.size()) != p) throw InputError("cochain key '" + key + "' has the wrong number of arguments");
        c.set(args, value_from_json(value, S->module().dim()));
    }
    return c;
}

Json cochain_to_json(const Cochain& c) {
    Json out = Json::object();
    const int order = c.group().order();
    for (int64_t i = 0; i < c.size(); ++i) {
        Vec v = c.at_index(i);
        if (is_zero(v)) continue;
        out[tuple_key(tuple_at(i, order, c.degree()))] = v;
    }
    return out;
}

Json table_to_json(const std::vector<std::vector<int>>& t) {
    Json out = Json::object();
    for (size_t a = 0; a < t.size(); ++a)
        for (size_t b = 0; b < t[a].size(); ++b)
            if (t[a][b] != 0) out[tuple_key({int(a), int(b)})] = t[a][b];
    return out;
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    if (trim(text).empty()) return out;
    for (const auto& part : split(text, ',')) out.push_back(int(parse_int(part, "element index")));
    return out;
}

std::string rational_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

uint64_t fnv1a64(std::string_view data) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string results_digest(const Json& results) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(results.dump())));
    return std::string("fnv1a64:") + buf;
}

Json RunManifest::to_json() const {
    return Json{{"command", command},       {"inputs", inputs},
                {"seed", seed},             {"tolerances", tolerances},
                {"grid", grid},             {"tool_version", tool_version},
                {"results_digest", digest}};
}

}  // namespace cocycle
