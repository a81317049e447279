#pragma once

#include <json.hpp>

#include "gt/galois.hpp"

namespace gt {

using Json = nlohmann::ordered_json;

// polynomials serialize as lists of {"exp": {"k,i": e}, "coef": "p/q"} in
// canonical monomial order
Json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const Json& j, const Shape& shape);

Json point_to_json(const Point& v);
Json matrix_to_json(const Mat& m);

// {"mu": [...], "simple_roots": [[k,i,k',j'], ...]}; simple_roots omitted
// means the full type A system
std::shared_ptr<const CoxeterGroup> coxeter_from_json(const Json& j);

// {"mu": [...], "rprime": n, "generators": [{"k":1,"sign":"+","f":"expr"}]}
GaloisConfig config_from_json(const Json& j);
GaloisConfig config_from_file(const std::string& path);

// {"seed": [rationals], "terms": [{"z": [...], "sigma": "s1*s2", "coef": "p/q"}]}
Json opvec_to_json(const SeedContext& ctx, const OperatorVector& x);
OperatorVector opvec_from_json(const SeedContext& ctx, const Json& j);

Json seed_to_json(const SeedContext& ctx);

}  // namespace gt
