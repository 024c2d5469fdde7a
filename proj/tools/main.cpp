#include "toric/pipeline.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using toric::input_error;
using toric::JobSpec;
using toric::Json;

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open job file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw input_error(std::string("job file is not valid JSON: ") + e.what());
    }
}

JobSpec resolve_job(const std::string& job_path, const std::string& fixture) {
    if (job_path.empty() == fixture.empty())
        throw input_error("give exactly one of --job or --fixture");
    if (!job_path.empty()) return toric::job_from_json(load_json_file(job_path));
    return toric::fixture_job(fixture);
}

// "(a/b,c/d)" with optional parentheses and spaces
void apply_window(JobSpec& job, const std::string& text) {
    if (text.empty()) return;
    std::string s;
    for (char c : text)
        if (c != '(' && c != ')' && c != ' ') s.push_back(c);
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw input_error("window must look like (a/b,c/d)");
    job.window_lo = toric::parse_rational(s.substr(0, comma));
    job.window_hi = toric::parse_rational(s.substr(comma + 1));
    if (!(job.window_lo < job.window_hi)) throw input_error("window is empty");
}

void write_report(const Json& doc, const std::string& out_path) {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw input_error("cannot open output file: " + out_path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toric Fano toolkit: KE obstruction, reductivity, coupled KE search"};
    app.require_subcommand(1);

    std::string job_path, fixture, out_path, window_text;
    int max_dim = 8;

    CLI::App* analyze = app.add_subcommand("analyze", "fan, polytope, KE and reductivity report");
    analyze->add_option("--job", job_path, "job document (JSON)");
    analyze->add_option("--fixture", fixture, "built-in fixture name");
    analyze->add_option("--out", out_path, "output path (default: stdout)");

    CLI::App* cke = app.add_subcommand("cke", "full coupled Kahler-Einstein pipeline");
    cke->add_option("--job", job_path, "job document (JSON)");
    cke->add_option("--fixture", fixture, "built-in fixture name");
    cke->add_option("--out", out_path, "output path (default: stdout)");
    cke->add_option("--window", window_text, "parameter window, e.g. \"(1/4,3/4)\"");

    CLI::App* scan = app.add_subcommand("scan", "classify projective-bundle fans up to a dimension");
    scan->add_option("--max-dim", max_dim, "largest total dimension (default 8)");
    scan->add_option("--out", out_path, "output path (default: stdout)");

    CLI::App* fixtures = app.add_subcommand("fixtures", "list built-in fixtures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (analyze->parsed()) {
            write_report(toric::analyze_report(resolve_job(job_path, fixture)), out_path);
            return 0;
        }
        if (cke->parsed()) {
            JobSpec job = resolve_job(job_path, fixture);
            apply_window(job, window_text);
            const toric::CkeOutcome oc = toric::run_cke(job);
            write_report(oc.report, out_path);
            return oc.decisive ? 0 : 2;
        }
        if (scan->parsed()) {
            write_report(toric::scan_report(max_dim), out_path);
            return 0;
        }
        if (fixtures->parsed()) {
            for (const auto& name : toric::fixture_names()) std::cout << name << "\n";
            return 0;
        }
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const toric::degenerate_error& e) {
        std::cerr << "degenerate: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
