#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "fanforge/report.hpp"
#include "fanforge/svg_plot.hpp"

using namespace fanforge;

namespace {

enum Exit
{
    kOk = 0,
    kCheckFailed = 1,
    kBadInput = 2,
    kAxiom = 3,
    kUnsupported = 4,
    kInternal = 5,
};

struct Settings
{
    std::string input;
    std::string output;
    std::string format = "json";
    bool no_overlap = false;
    std::size_t fiber_bound = 6;
    unsigned threads = 0;
    long p = 2, q = 1;
    bool timing = false;
};

Problem load(const Settings& s)
{
    if (s.input.empty())
        throw ParseError("--input is required");
    std::ifstream in(s.input);
    if (!in)
        throw ParseError("cannot open " + s.input);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return problem_from_json(j);
}

void emit(const Settings& s, const std::string& body)
{
    if (s.output.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(s.output);
    if (!out)
        throw ParseError("cannot write " + s.output);
    out << body;
}

std::string render(const Settings& s, const Report& r)
{
    return s.format == "json" ? r.data.dump(2) + "\n" : r.text;
}

RunOptions options(const Settings& s)
{
    RunOptions o;
    o.verify_overlap = !s.no_overlap;
    o.fiber_bound = s.fiber_bound;
    o.threads = s.threads ? s.threads : std::max(1u, std::thread::hardware_concurrency());
    return o;
}

int run(const std::string& cmd, const Settings& s)
{
    if (cmd == "family") {
        auto fm = family_matrices(s.p, s.q);
        FanMatrix v = validate_fan_matrix(fm.v);
        Report r = compare_report(v, WeightMatrix::from_matrix(fm.q, v), options(s));
        r.data["family"] = {{"p", s.p}, {"q", s.q}};
        emit(s, render(s, r));
        return r.ok ? kOk : kCheckFailed;
    }
    if (cmd == "conjecture") {
        Problem pr = load(s);
        Report r = conjecture_report(pr.v);
        emit(s, render(s, r));
        return kOk;
    }
    Problem pr = load(s);
    if (cmd == "validate") {
        Report r = validate_report(pr.v, pr.q);
        emit(s, render(s, r));
        return kOk;
    }
    if (cmd == "plot") {
        auto fans = enumerate_sf(pr.v, !s.no_overlap);
        auto plot = plot_secondary_fan(pr.q, fans);
        nlohmann::json labels = nlohmann::json::array();
        std::ostringstream text;
        for (const auto& c : plot.chambers) {
            labels.push_back({{"label", c.label}, {"fan", c.fan}});
            text << "chamber " << c.label << " = fan " << c.fan << "\n";
        }
        for (auto k : plot.degenerate)
            text << "fan " << k << ": nef cone is a ray\n";
        if (s.output.empty()) {
            std::cout << plot.svg;
        } else {
            emit(s, plot.svg);
            nlohmann::json j = {{"chambers", labels}, {"ray_nef_fans", plot.degenerate}};
            std::cout << (s.format == "json" ? j.dump(2) + "\n" : text.str());
        }
        return kOk;
    }
    RunOptions o = options(s);
    Report r;
    if (cmd == "sf")
        r = sf_report(pr.v, pr.q, o);
    else if (cmd == "psf")
        r = psf_report(pr.v, pr.q, o);
    else
        r = compare_report(pr.v, pr.q, o);
    emit(s, render(s, r));
    return r.ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"fanforge: complete simplicial fans, Groebner fans and projectivity of toric varieties"};
    app.require_subcommand(1);
    Settings s;

    auto common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("--input", s.input, "JSON file holding \"V\" or \"Q\"")->required();
        sub->add_option("--output", s.output, "write the result here instead of stdout");
        sub->add_option("--format", s.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };
    auto pipeline = [&](CLI::App* sub) {
        sub->add_flag("--no-overlap-check", s.no_overlap, "skip the pairwise interior test");
        sub->add_option("--fiber-bound", s.fiber_bound, "degree bound for the fiber checks")
            ->check(CLI::PositiveNumber);
        sub->add_option("--threads", s.threads, "worker threads (default: all cores)");
        sub->add_flag("--timing", s.timing, "print elapsed time to stderr");
    };

    auto* validate = app.add_subcommand("validate", "check the fan-matrix axioms");
    common(validate, true);
    auto* sf = app.add_subcommand("sf", "enumerate SF(V)");
    common(sf, true);
    pipeline(sf);
    auto* psf = app.add_subcommand("psf", "enumerate PSF(V) through the Groebner fan");
    common(psf, true);
    pipeline(psf);
    auto* compare = app.add_subcommand("compare", "run both pipelines and cross-check");
    common(compare, true);
    pipeline(compare);
    auto* plot = app.add_subcommand("plot", "SVG of the secondary fan section (r = 3)");
    common(plot, true);
    plot->add_flag("--no-overlap-check", s.no_overlap, "skip the pairwise interior test");
    auto* family = app.add_subcommand("family", "compare on the deformation family member (p, q)");
    common(family, false);
    pipeline(family);
    family->add_option("--p", s.p, "p >= 1")->required();
    family->add_option("--q", s.q, "q >= 1")->required();
    auto* conjecture = app.add_subcommand("conjecture", "search for pseudofans that are not fans");
    common(conjecture, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kBadInput;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    auto start = std::chrono::steady_clock::now();
    int code;
    try {
        code = run(cmd, s);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kBadInput;
    } catch (const AxiomViolation& e) {
        std::cerr << "axiom violation (" << e.axiom() << "): " << e.witness() << "\n";
        return kAxiom;
    } catch (const UnsupportedRank& e) {
        std::cerr << "unsupported rank: " << e.what() << "\n";
        return kUnsupported;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    if (s.timing) {
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        std::cerr << cmd << ": " << dt.count() << " s\n";
    }
    return code;
}
