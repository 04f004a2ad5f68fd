#include "wildgoppa/serialize.hpp"

#include "wildgoppa/errors.hpp"

namespace wildgoppa {

Json code_to_json(const LinearCode& c) {
    const Field& f = c.field();
    Json j;
    j["field"] = {{"p", f.characteristic()}, {"a", f.a()}, {"m", f.m()}};
    j["n"] = c.length();
    j["k"] = c.dimension();
    j["generator"] = c.generator().to_rows();
    return j;
}

LinearCode code_from_json(const Json& j) {
    try {
        const auto& fj = j.at("field");
        const Field f = build_tower(fj.at("p").get<unsigned>(), fj.at("a").get<unsigned>(), fj.at("m").get<unsigned>());
        const auto n = j.at("n").get<std::size_t>();
        const auto rows = j.at("generator").get<std::vector<std::vector<Elem>>>();
        LinearCode c(MatrixGF::from_rows(f, n, rows));
        if (c.dimension() != j.at("k").get<std::size_t>()) throw InputError("code record: k does not match the generator rank");
        return c;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed code record: ") + e.what());
    }
}

Json report_to_json(const IdentityReport& r) {
    Json j;
    j["q"] = r.q;
    j["m"] = r.m;
    j["t"] = r.t;
    j["exponents"] = r.exponents;
    j["dims"] = r.dims;
    j["equal"] = r.equal;
    j["gap"] = r.gap;
    j["r"] = r.r;
    return j;
}

IdentityReport report_from_json(const Json& j) {
    try {
        IdentityReport r;
        r.q = j.at("q").get<std::uint64_t>();
        r.m = j.at("m").get<unsigned>();
        r.t = j.at("t").get<int>();
        r.exponents = j.at("exponents").get<std::vector<std::uint64_t>>();
        r.dims = j.at("dims").get<std::vector<std::size_t>>();
        r.equal = j.at("equal").get<std::vector<bool>>();
        r.gap = j.at("gap").get<std::size_t>();
        r.r = j.at("r").get<int>();
        return r;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed identity report: ") + e.what());
    }
}

Json to_json(const RsEquivalence& r) { return {{"k", r.k}, {"dimension", r.dimension}, {"equal", r.equal}}; }

Json to_json(const CofactorReport& r) {
    Json j = report_to_json(r.report);
    j["typo_suspected"] = r.typo_suspected;
    return j;
}

Json to_json(const DimensionValue& v) { return {{"value", v.value}, {"exact", v.exact}, {"beyond_paper", v.beyond_paper}}; }

Json to_json(const ClassDecomposition& d) {
    Json classes = Json::array();
    for (const auto& c : d.classes) classes.push_back({{"b", c.representative}, {"size", c.size()}, {"members", c.members}});
    return {{"q", d.q}, {"m", d.m}, {"modulus", d.modulus}, {"count", d.classes.size()}, {"classes", classes}};
}

Json to_json(const KReport& r) {
    return {{"q", r.q},
            {"m", r.m},
            {"t", r.t},
            {"dim_K", r.dim_K},
            {"dim_K_mod_g", r.dim_K_mod_g},
            {"dim_intersection", r.dim_intersection},
            {"in_kernel_of_tau", r.in_kernel_of_tau}};
}

Json to_json(const StartKey& k) {
    return {{"alpha", format_polynomial(k.alpha)}, {"index", k.index}, {"trace", k.trace}};
}

Json to_json(const Decomposition& d) {
    return {{"a", format_polynomial(d.a)},   {"index", d.index},     {"dim_K", d.dim_K},
            {"dim_T", d.dim_T},              {"dim_multiples", d.dim_multiples}, {"ambient", d.ambient},
            {"T_in_kernel_of_tau", d.T_in_kernel_of_tau}};
}

Json to_json(const DualReformulation& d) {
    return {{"dim_full", d.dim_full}, {"dim_multiples", d.dim_multiples}, {"equal", d.equal}};
}

}  // namespace wildgoppa
