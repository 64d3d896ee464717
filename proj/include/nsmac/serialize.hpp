#pragma once

// JSON encoding of coefficients, group algebra elements and cached
// polynomials (schema "v1").

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "nsmac/macdonald.hpp"

namespace nsmac {

struct SchemaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr const char* kSchemaVersion = "v1";

nlohmann::json to_json(const ParamMonomial& m);
nlohmann::json to_json(const ParamPoly& p);
nlohmann::json to_json(const CoeffFraction& c);
nlohmann::json to_json(const GroupAlgebraElement& f);
nlohmann::json to_json(const AffineWord& w);
nlohmann::json to_json(const RootSystemData& R);

ParamMonomial monomial_from_json(const nlohmann::json& j);
ParamPoly poly_from_json(const nlohmann::json& j);
CoeffFraction fraction_from_json(const nlohmann::json& j);
GroupAlgebraElement element_from_json(const nlohmann::json& j);
AffineWord word_from_json(const nlohmann::json& j);

// One cached polynomial. The normalizers and chain are kept for exact E only.
struct CacheRecord {
    std::string system;
    Weight weight;
    Spec spec = Spec::exact;
    GroupAlgebraElement poly;
    std::optional<CoeffFraction> e_lambda, f_lambda;
    std::optional<AffineWord> chain;
};

CacheRecord make_record(const MacdonaldEngine& M, const Weight& lambda, Spec s);
std::string dump_record(const CacheRecord& r);
CacheRecord parse_record(const std::string& text);  // throws SchemaError

// "A2/w=1,-2/exact"
std::string cache_key(const std::string& system, const Weight& lambda, Spec s);
// cache_dir/A2/w=1,-2/exact.json
std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& system, const Weight& lambda,
                                 Spec s);
std::optional<CacheRecord> load_cached(const std::filesystem::path& dir, const std::string& system,
                                       const Weight& lambda, Spec s);
void store_cached(const std::filesystem::path& dir, const CacheRecord& r);

}  // namespace nsmac
