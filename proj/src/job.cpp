#include "elim/job.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "elim/chi.hpp"
#include "elim/cube.hpp"
#include "elim/error.hpp"
#include "elim/groebner.hpp"
#include "elim/resultant.hpp"
#include "elim/selftest.hpp"

namespace elim {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& message) {
    throw Error(ErrorCode::BadInput, message);
}

const json& field(const json& payload, const char* key) {
    if (!payload.is_object() || !payload.contains(key))
        bad(std::string("payload is missing \"") + key + "\"");
    return payload.at(key);
}

int int_field(const json& doc, const char* key) {
    const json& v = field(doc, key);
    if (!v.is_number_integer()) bad(std::string("\"") + key + "\" must be an integer");
    return v.get<int>();
}

std::string string_field(const json& doc, const char* key) {
    const json& v = field(doc, key);
    if (!v.is_string()) bad(std::string("\"") + key + "\" must be a string");
    return v.get<std::string>();
}

void value_fields(json& report, const Rational& q) {
    report["value"] = to_string(q);
    report["value_num"] = q.get_num().get_str();
    report["value_den"] = q.get_den().get_str();
}

json rational_json(const Rational& q) {
    return json{{"num", q.get_num().get_str()},
                {"den", q.get_den().get_str()},
                {"text", to_string(q)}};
}

std::vector<Polynomial> parse_forms(const json& list, int n_vars,
                                    const char* what) {
    if (!list.is_array() || list.empty())
        bad(std::string("\"") + what + "\" must be a non-empty array");
    std::vector<Polynomial> out;
    for (const json& item : list) {
        if (!item.is_string())
            bad(std::string("\"") + what + "\" entries must be strings");
        out.push_back(parse_polynomial(item.get<std::string>(), n_vars));
    }
    return out;
}

int run_resultant(const json& payload, json& report) {
    int n_vars = int_field(payload, "n_vars");
    if (n_vars < 1) bad("\"n_vars\" must be at least 1");
    std::vector<Polynomial> forms = parse_forms(field(payload, "forms"), n_vars, "forms");
    if (static_cast<int>(forms.size()) != n_vars)
        bad("a system in " + std::to_string(n_vars) + " variables needs " +
            std::to_string(n_vars) + " forms");

    MacaulaySystem sys;
    if (payload.contains("degrees")) {
        const json& dj = payload.at("degrees");
        if (!dj.is_array()) bad("\"degrees\" must be an array of integers");
        std::vector<int> degrees;
        for (const json& d : dj) {
            if (!d.is_number_integer()) bad("\"degrees\" must be an array of integers");
            degrees.push_back(d.get<int>());
        }
        sys = make_system(forms, degrees);
    } else {
        sys = make_system(forms);
    }

    std::string mode_text = "auto";
    if (payload.contains("mode")) mode_text = string_field(payload, "mode");
    ResultantMode mode;
    if (mode_text == "auto") mode = ResultantMode::Auto;
    else if (mode_text == "macaulay") mode = ResultantMode::Macaulay;
    else if (mode_text == "poisson") mode = ResultantMode::Poisson;
    else if (mode_text == "crosscheck") mode = ResultantMode::Crosscheck;
    else bad("unknown mode \"" + mode_text + "\"");

    ResultantValue v = resultant(sys, mode);
    report["method"] = to_string(v.method);
    value_fields(report, v.value);
    report["degrees"] = sys.degrees;
    report["nu"] = sys.nu;
    json cert = json::array();
    for (const Integer& k : v.degrees_certificate) cert.push_back(k.get_str());
    report["degrees_certificate"] = cert;
    return 0;
}

int run_intersection(const json& payload, json& report) {
    int n = int_field(payload, "n");
    if (n < 1) bad("\"n\" must be at least 1");
    const json& dj = field(payload, "degrees");
    if (!dj.is_array() || dj.empty())
        bad("\"degrees\" must be a non-empty array of degree vectors");
    std::vector<DegreeVector> slots;
    for (const json& slot : dj) {
        if (!slot.is_array() || slot.empty())
            bad("each degree vector must be a non-empty array of integers");
        DegreeVector d;
        for (const json& e : slot) {
            if (!e.is_number_integer()) bad("degrees must be integers");
            d.push_back(e.get<long long>());
        }
        if (!slots.empty() && d.size() != slots.front().size())
            bad("all degree vectors must have the same length");
        slots.push_back(d);
    }
    ChiFunction chi =
        chi_projective_fn(n, static_cast<int>(slots.front().size()));
    value_fields(report, intersection_number(chi, slots));
    return 0;
}

int run_norm(const json& payload, json& report) {
    int n_vars = int_field(payload, "n_vars");
    if (n_vars < 1) bad("\"n_vars\" must be at least 1");
    std::vector<Polynomial> gens =
        parse_forms(field(payload, "generators"), n_vars, "generators");
    Polynomial element = parse_polynomial(string_field(payload, "element"), n_vars);

    std::string order_text = "grevlex";
    if (payload.contains("order")) order_text = string_field(payload, "order");
    MonomialOrder order;
    if (order_text == "grevlex") order = MonomialOrder::Grevlex;
    else if (order_text == "lex") order = MonomialOrder::Lex;
    else bad("unknown order \"" + order_text + "\"");

    GroebnerBasis gb = buchberger(gens, order);
    QuotientAlgebra alg = quotient_algebra(gb);
    value_fields(report, norm(alg, gb, element));
    report["dimension"] = alg.basis.size();
    json basis = json::array();
    for (const Monomial& m : alg.basis) basis.push_back(to_string(m));
    report["basis"] = basis;
    return 0;
}

json object_json(const FormalObject& o) {
    json coeffs = json::object();
    for (const auto& [symbol, c] : o.coefficients)
        if (c != 0) coeffs[symbol] = c;
    return json{{"coefficients", coeffs}, {"grade", o.grade}};
}

FormalObject object_from(const json& j) {
    if (!j.is_object()) bad("each vertex needs an \"object\" document");
    FormalObject o;
    if (j.contains("grade")) {
        if (!j.at("grade").is_number_integer()) bad("\"grade\" must be an integer");
        o.grade = j.at("grade").get<long long>();
    }
    if (j.contains("coefficients")) {
        const json& cj = j.at("coefficients");
        if (!cj.is_object()) bad("\"coefficients\" must be an object");
        for (const auto& [symbol, c] : cj.items()) {
            if (!c.is_number_integer()) bad("coefficients must be integers");
            long long v = c.get<long long>();
            if (v != 0) o.coefficients[symbol] = v;
        }
    }
    return o;
}

int run_cube_verify(const json& payload, json& report) {
    int n = int_field(payload, "dimension");
    if (n < 0) bad("\"dimension\" must be non-negative");
    CubeArrangement k(n);

    const json& vj = field(payload, "vertices");
    if (!vj.is_array()) bad("\"vertices\" must be an array");
    if (vj.size() != k.vertex_count())
        bad("a " + std::to_string(n) + "-cube needs " +
            std::to_string(k.vertex_count()) + " vertices");
    std::vector<bool> seen(k.vertex_count(), false);
    for (const json& entry : vj) {
        if (!entry.is_object() || !entry.contains("vertex"))
            bad("each vertex entry needs a \"vertex\" bit list");
        const json& bits_j = entry.at("vertex");
        if (!bits_j.is_array()) bad("\"vertex\" must be an array of bits");
        std::vector<int> bits;
        for (const json& b : bits_j) {
            if (!b.is_number_integer()) bad("\"vertex\" must be an array of bits");
            bits.push_back(b.get<int>());
        }
        Vertex v(bits);
        if (v.dimension() != n) bad("vertex arity differs from the dimension");
        if (seen[v.mask()]) bad("vertex " + to_string(v) + " appears twice");
        seen[v.mask()] = true;
        k.at(v) = object_from(entry.value("object", json::object()));
    }

    report["delta"] = object_json(delta(k));
    auto rec = edges(k);
    report["standard"] = rec.has_value();
    if (rec.has_value()) {
        report["base"] = object_json(rec->first);
        json sides = json::array();
        for (const FormalObject& o : rec->second) sides.push_back(object_json(o));
        report["edges"] = sides;
    }

    if (payload.contains("chi")) {
        int ambient = int_field(payload.at("chi"), "ambient");
        if (ambient < 0) bad("\"ambient\" must be non-negative");
        std::vector<Symbol> universe = symbol_universe(k);
        if (universe.empty())
            bad("the arrangement carries no symbols to evaluate chi on");
        ChiFunction chi =
            chi_projective_fn(ambient, static_cast<int>(universe.size()));
        json section;
        section["ambient"] = ambient;
        section["symbols"] = universe;
        section["chi_delta"] = rational_json(chi_delta(k, universe, chi));
        if (n >= 2) {
            json pairs = json::array();
            bool coherent = true;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    json entry{{"i", i}, {"j", j}};
                    try {
                        entry["sign"] = epsilon_ij(k, i, j, chi);
                    } catch (const Error& e) {
                        entry["error"] = {{"type", to_string(e.code())},
                                          {"message", e.what()}};
                        coherent = false;
                    }
                    pairs.push_back(entry);
                }
            section["squares"] = pairs;
            section["coherent"] = coherent;
        }
        report["chi"] = section;
    }
    return 0;
}

int run_selftest_job(std::uint64_t seed, json& report) {
    std::vector<PropertyResult> rows = run_selftest(seed);
    json props = json::array();
    bool all = true;
    for (const PropertyResult& r : rows) {
        json failures = json::array();
        for (const auto& [index, message] : r.failures)
            failures.push_back({{"index", index}, {"message", message}});
        props.push_back({{"name", r.name},
                         {"pass", r.pass},
                         {"checked", r.checked},
                         {"skipped", r.skipped},
                         {"failed", r.failed},
                         {"seconds", r.seconds},
                         {"failures", failures}});
        all = all && r.pass;
    }
    report["properties"] = props;
    report["pass"] = all;
    return all ? 0 : 1;
}

}  // namespace

JobOutcome run_job(const json& job) {
    auto start = std::chrono::steady_clock::now();
    json report;
    int code = 0;
    try {
        if (!job.is_object()) bad("the job must be a JSON object");
        if (!job.contains("command") || !job.at("command").is_string())
            bad("the job needs a \"command\" string");
        std::string command = job.at("command").get<std::string>();
        report["command"] = command;

        std::uint64_t seed = 0;
        if (job.contains("seed")) {
            const json& s = job.at("seed");
            if (!s.is_number_unsigned() &&
                !(s.is_number_integer() && s.get<long long>() >= 0))
                bad("\"seed\" must be a non-negative integer");
            seed = s.get<std::uint64_t>();
        }
        report["seed"] = seed;

        json payload = job.value("payload", json::object());
        report["inputs"] = payload;

        if (command == "resultant") code = run_resultant(payload, report);
        else if (command == "intersection") code = run_intersection(payload, report);
        else if (command == "norm") code = run_norm(payload, report);
        else if (command == "cube-verify") code = run_cube_verify(payload, report);
        else if (command == "selftest") code = run_selftest_job(seed, report);
        else bad("unknown command \"" + command + "\"");
    } catch (const Error& e) {
        report["error"] = {{"type", to_string(e.code())}, {"message", e.what()}};
        code = is_input_error(e.code()) ? 2 : 1;
    } catch (const json::exception& e) {
        report["error"] = {{"type", "BadInput"}, {"message", e.what()}};
        code = 2;
    }
    report["seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return {report, code};
}

}  // namespace elim
