#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "elim/job.hpp"

namespace {

int emit(const nlohmann::json& report, int code, const std::string& out_path) {
    std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return code;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
    }
    out << text;
    return code;
}

nlohmann::json input_error(const std::string& message) {
    return nlohmann::json{
        {"error", {{"type", "BadInput"}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact resultants, intersection numbers, quotient norms, "
                 "and cube checks"};
    std::string job_path;
    app.add_option("--job", job_path, "path to the job JSON document")
        ->required();
    std::string mode;
    app.add_option("--mode", mode,
                   "resultant path: auto, macaulay, poisson, crosscheck")
        ->check(CLI::IsMember({"auto", "macaulay", "poisson", "crosscheck"}));
    std::uint64_t seed = 0;
    CLI::Option* seed_opt =
        app.add_option("--seed", seed, "seed for randomized suites");
    std::string out_path;
    app.add_option("--out", out_path, "write the report here instead of stdout");
    CLI11_PARSE(app, argc, argv);

    std::ifstream in(job_path);
    if (!in)
        return emit(input_error("cannot read job file " + job_path), 2, out_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    nlohmann::json job = nlohmann::json::parse(buffer.str(), nullptr, false);
    if (job.is_discarded())
        return emit(input_error("job file is not valid JSON"), 2, out_path);

    // Flags override the corresponding job fields.
    if (!mode.empty() && job.is_object() &&
        (!job.contains("payload") || job.at("payload").is_object()))
        job["payload"]["mode"] = mode;
    if (seed_opt->count() > 0 && job.is_object()) job["seed"] = seed;

    elim::JobOutcome outcome = elim::run_job(job);
    return emit(outcome.report, outcome.exit_code, out_path);
}
