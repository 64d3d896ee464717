#include "nsmac/serialize.hpp"

#include <fstream>
#include <sstream>

namespace nsmac {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
    return j.at(key);
}

Weight weight_from_json(const json& j) {
    if (!j.is_array()) throw SchemaError("weight must be an integer array");
    Weight w;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw SchemaError("weight must be an integer array");
        w.push_back(x.get<int64_t>());
    }
    return w;
}

}  // namespace

json to_json(const ParamMonomial& m) { return json{{"q", m.qe}, {"ts", m.ae}, {"tl", m.be}}; }

json to_json(const ParamPoly& p) {
    json arr = json::array();
    for (const auto& t : p.terms()) {
        json x = to_json(t.m);
        x["c"] = t.c.get_str();
        arr.push_back(std::move(x));
    }
    return arr;
}

json to_json(const CoeffFraction& c) {
    json den = json::array();
    for (const auto& m : c.den()) den.push_back(to_json(m));
    return json{{"num", to_json(c.num())}, {"den", den}};
}

json to_json(const GroupAlgebraElement& f) {
    json arr = json::array();
    for (const auto& [w, c] : f.terms()) arr.push_back(json{{"weight", w}, {"coeff", to_json(c)}});
    return arr;
}

json to_json(const AffineWord& w) { return json{{"omega", w.omega}, {"letters", w.letters}}; }

json to_json(const RootSystemData& R) {
    json pos = json::array();
    for (const auto& b : R.positive_roots) pos.push_back(b);
    json gram = json::array();
    for (const auto& row : R.weight_gram) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.get_str());
        gram.push_back(r);
    }
    return json{{"schema", kSchemaVersion},
                {"system", R.name()},
                {"rank", R.rank},
                {"cartan", R.cartan},
                {"d", R.d},
                {"positive_roots", pos},
                {"theta", R.theta},
                {"theta_weight", R.theta_weight},
                {"weight_gram", gram},
                {"r", R.r},
                {"m_star", R.m_star},
                {"m_literal", R.m_literal},
                {"minuscule", R.minuscule}};
}

ParamMonomial monomial_from_json(const json& j) {
    try {
        return {field(j, "q").get<int64_t>(), field(j, "ts").get<int64_t>(), field(j, "tl").get<int64_t>()};
    } catch (const json::exception& e) {
        throw SchemaError(std::string("bad monomial: ") + e.what());
    }
}

ParamPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw SchemaError("polynomial must be an array of terms");
    std::vector<ParamTerm> terms;
    for (const auto& t : j) {
        const json& c = field(t, "c");
        if (!c.is_string()) throw SchemaError("coefficient must be a decimal string");
        mpz_class v;
        if (v.set_str(c.get<std::string>(), 10) != 0) throw SchemaError("bad integer '" + c.get<std::string>() + "'");
        terms.push_back({monomial_from_json(t), v});
    }
    return ParamPoly::from_terms(std::move(terms));
}

CoeffFraction fraction_from_json(const json& j) {
    const json& den = field(j, "den");
    if (!den.is_array()) throw SchemaError("den must be an array");
    std::vector<ParamMonomial> ms;
    for (const auto& m : den) ms.push_back(monomial_from_json(m));
    return CoeffFraction(poly_from_json(field(j, "num")), std::move(ms));
}

GroupAlgebraElement element_from_json(const json& j) {
    if (!j.is_array()) throw SchemaError("group algebra element must be an array");
    GroupAlgebraElement f;
    for (const auto& t : j) f.add_term(weight_from_json(field(t, "weight")), fraction_from_json(field(t, "coeff")));
    return f;
}

AffineWord word_from_json(const json& j) {
    AffineWord w{weight_from_json(field(j, "omega")), {}};
    for (const auto& x : field(j, "letters")) {
        if (!x.is_number_integer()) throw SchemaError("letters must be integers");
        w.letters.push_back(x.get<int>());
    }
    return w;
}

CacheRecord make_record(const MacdonaldEngine& M, const Weight& lambda, Spec s) {
    CacheRecord r;
    r.system = M.system().name();
    r.weight = lambda;
    r.spec = s;
    if (s == Spec::exact) {
        const MacdonaldResult& E = M.compute_E(lambda);
        r.poly = E.poly;
        r.e_lambda = E.e_lambda;
        r.f_lambda = E.f_lambda;
        r.chain = E.chain;
    } else {
        r.poly = M.E(lambda, s);
    }
    return r;
}

std::string dump_record(const CacheRecord& r) {
    json j{{"schema", kSchemaVersion},
           {"system", r.system},
           {"weight", r.weight},
           {"spec", spec_name(r.spec)},
           {"poly", to_json(r.poly)}};
    if (r.e_lambda) j["e_lambda"] = to_json(*r.e_lambda);
    if (r.f_lambda) j["f_lambda"] = to_json(*r.f_lambda);
    if (r.chain) j["chain"] = to_json(*r.chain);
    return j.dump(1) + "\n";
}

CacheRecord parse_record(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("not valid JSON: ") + e.what());
    }
    const json& schema = field(j, "schema");
    if (!schema.is_string() || schema.get<std::string>() != kSchemaVersion)
        throw SchemaError("unsupported schema " + schema.dump());
    CacheRecord r;
    if (!field(j, "system").is_string() || !field(j, "spec").is_string()) throw SchemaError("system and spec must be strings");
    r.system = j["system"].get<std::string>();
    r.weight = weight_from_json(field(j, "weight"));
    try {
        r.spec = parse_spec(j["spec"].get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
    r.poly = element_from_json(field(j, "poly"));
    if (j.contains("e_lambda")) r.e_lambda = fraction_from_json(j["e_lambda"]);
    if (j.contains("f_lambda")) r.f_lambda = fraction_from_json(j["f_lambda"]);
    if (j.contains("chain")) r.chain = word_from_json(j["chain"]);
    return r;
}

std::string cache_key(const std::string& system, const Weight& lambda, Spec s) {
    std::string w;
    for (size_t i = 0; i < lambda.size(); ++i) w += (i ? "," : "") + std::to_string(lambda[i]);
    return system + "/w=" + w + "/" + spec_name(s);
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& system, const Weight& lambda,
                                 Spec s) {
    return dir / (cache_key(system, lambda, s) + ".json");
}

std::optional<CacheRecord> load_cached(const std::filesystem::path& dir, const std::string& system,
                                       const Weight& lambda, Spec s) {
    std::ifstream in(cache_path(dir, system, lambda, s));
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    CacheRecord r = parse_record(ss.str());
    if (r.system != system || r.weight != lambda || r.spec != s)
        throw SchemaError("cache file does not match its key " + cache_key(system, lambda, s));
    return r;
}

void store_cached(const std::filesystem::path& dir, const CacheRecord& r) {
    std::filesystem::path p = cache_path(dir, r.system, r.weight, r.spec);
    std::filesystem::create_directories(p.parent_path());
    std::filesystem::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << dump_record(r);
    }
    std::filesystem::rename(tmp, p);
}

}  // namespace nsmac
