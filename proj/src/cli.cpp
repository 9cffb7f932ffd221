#include "hend/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hend/generators.hpp"
#include "hend/instance_io.hpp"

namespace hend {

namespace {

using nlohmann::ordered_json;

std::vector<InstanceRecord> load(const std::string& path) {
    if (path == "-") return read_instances(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_instances(in);
}

// Start each command's output file from scratch; emit then appends lines.
void reset(const std::string& path) {
    if (path == "-") return;
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot open " + path);
}

void emit(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::invalid_argument("cannot open " + path);
    out << text << '\n';
}

std::vector<StepFuzzySet> flatten_fuzzy(const std::vector<InstanceRecord>& recs) {
    std::vector<StepFuzzySet> out;
    for (const auto& r : recs)
        for (const auto& u : r.members) out.push_back(u);
    if (out.empty()) throw std::invalid_argument("input holds no fuzzy sets");
    for (const auto& u : out)
        if (!u.space()->same(*out.front().space()))
            throw std::invalid_argument("mixed ground spaces in input");
    return out;
}

std::vector<double> parse_grid(const std::string& s) {
    std::vector<double> grid;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        grid.push_back(std::stod(tok));
    }
    if (grid.empty()) throw CLI::ValidationError("--alpha-grid", "empty grid");
    return grid;
}

int run_gen(const std::string& name, const std::string& out_path, std::uint64_t seed,
            std::size_t n, double spacing, double r, double mesh, std::size_t members) {
    reset(out_path);
    InstanceMeta meta;
    meta.seed = seed;
    meta.generator = name + std::string("/") + kRngAlgorithm;
    std::vector<InstanceRecord> recs;
    if (name == "escaping") {
        recs.push_back(InstanceRecord::of_sequence(gen_escaping(n, spacing), meta));
    } else if (name == "oscillating") {
        recs.push_back(InstanceRecord::of_sequence(gen_oscillating(n), meta));
    } else if (name == "nested") {
        recs.push_back(InstanceRecord::of_sequence(gen_nested_intervals(n), meta));
    } else if (name == "empu") {
        recs.push_back(InstanceRecord::of_fuzzy(gen_example_empu(r, mesh), meta));
    } else if (name == "rnce") {
        auto [w, u] = gen_example_rnce(r, n, mesh);
        recs.push_back(InstanceRecord::of_sequence(std::move(w), meta));
        recs.push_back(InstanceRecord::of_fuzzy(std::move(u), meta));
    } else if (name == "random") {
        RandomFamilySpec spec;
        spec.member_count = members;
        recs.push_back(InstanceRecord::of_family(gen_random_family(spec, seed), meta));
    } else {
        throw CLI::ValidationError("generator", "unknown generator " + name);
    }
    for (const auto& rec : recs) emit(out_path, emit_record(rec));
    return 0;
}

int run_dist(const std::string& in_path, const std::string& out_path,
             const std::string& metric) {
    reset(out_path);
    const auto sets = flatten_fuzzy(load(in_path));
    const GroundSpace& space = *sets.front().space();
    ordered_json rep;
    rep["kind"] = "dist_matrix";
    rep["metric"] = metric;
    std::vector<std::vector<std::string>> cells(sets.size(),
                                                std::vector<std::string>(sets.size(), "0"));
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            std::string cell;
            if (metric == "hausdorff") {
                const ExtDist h = hausdorff(space, sets[i].cut(0.0), sets[j].cut(0.0));
                cell = h.infinite ? "inf" : num17(h.value);
            } else {
                const auto variant = metric == "hend-max" ? ProductMetricVariant::Max
                                                          : ProductMetricVariant::Sum;
                cell = num17(endograph_dist(variant, sets[i], sets[j]));
            }
            cells[i][j] = cell;
            cells[j][i] = std::move(cell);
        }
    ordered_json rows = ordered_json::array();
    for (const auto& r : cells) {
        ordered_json row = ordered_json::array();
        for (const auto& c : r) row.push_back(c);
        rows.push_back(std::move(row));
    }
    rep["matrix"] = std::move(rows);
    emit(out_path, rep.dump());
    std::cerr << "dist: " << sets.size() << "x" << sets.size() << " " << metric
              << " matrix emitted\n";
    return 0;
}

std::pair<FuzzySeqWindow, std::optional<StepFuzzySet>> split_seq_and_limit(
    const std::vector<InstanceRecord>& recs, std::size_t tail) {
    FuzzySeqWindow w;
    std::optional<StepFuzzySet> limit;
    for (const auto& r : recs) {
        if (r.kind == InstanceRecord::Kind::Fuzzy) {
            limit = r.members.front();
        } else {
            for (const auto& u : r.members) w.members.push_back(u);
            if (r.kind == InstanceRecord::Kind::Sequence && r.tail_start > w.tail_start)
                w.tail_start = r.tail_start;
        }
    }
    if (w.members.empty()) throw std::invalid_argument("input holds no sequence");
    if (tail > 0) w.tail_start = tail;
    return {std::move(w), std::move(limit)};
}

int run_gamma(const std::string& in_path, const std::string& out_path, double eps,
              std::size_t tail) {
    reset(out_path);
    auto [w, limit] = split_seq_and_limit(load(in_path), tail);
    ordered_json rep;
    rep["kind"] = "gamma_report";
    rep["eps"] = num17(eps);
    bool pass;
    if (limit) {
        const GammaVerdict v = gamma_limit_check(w, *limit, eps);
        pass = v.pass;
        rep["mode"] = "limit_check";
        rep["pass"] = v.pass;
        if (v.failing_probe) {
            ordered_json p;
            for (double c : v.failing_probe->x.coords) p.push_back(num17(c));
            rep["failing_probe"] = {{"x", p}, {"level", num17(v.failing_probe->t)}};
        }
        if (v.failing_index) rep["failing_index"] = *v.failing_index;
    } else {
        const OscillationReport o = gamma_oscillation_probe(w, eps);
        pass = !o.oscillation;
        rep["mode"] = "oscillation_probe";
        rep["oscillation"] = o.oscillation;
        rep["pass"] = pass;
        if (o.witness) {
            ordered_json p;
            for (double c : o.witness->x.coords) p.push_back(num17(c));
            rep["witness"] = {{"x", p}, {"level", num17(o.witness->t)}};
        }
    }
    emit(out_path, rep.dump());
    std::cerr << "gamma-check: " << (pass ? "pass" : "FAIL") << " at eps=" << eps << "\n";
    return pass ? 0 : 1;
}

std::vector<double> default_grid() {
    std::vector<double> g;
    for (int i = 1; i <= 10; ++i) g.push_back(0.1 * i);
    return g;
}

int run_tb(const std::string& in_path, const std::string& out_path, double eps,
           const std::vector<double>& grid, std::size_t budget) {
    reset(out_path);
    const auto recs = load(in_path);
    FuzzyFamily fam;
    for (const auto& r : recs)
        for (const auto& u : r.members) fam.members.push_back(u);
    if (fam.members.empty()) throw std::invalid_argument("input holds no family");
    const TbReport t = tb_audit(fam, eps, grid, budget);
    ordered_json rep;
    rep["kind"] = "tb_report";
    rep["eps"] = num17(eps);
    rep["family_net_ok"] = t.family_net_ok;
    rep["family_net_size"] = t.family_net_size;
    if (t.family_uncovered) rep["family_uncovered"] = *t.family_uncovered;
    rep["forward_pass"] = t.forward_pass;
    if (t.forward_failing_alpha) rep["forward_failing_alpha"] = num17(*t.forward_failing_alpha);
    rep["cut_nets_ok"] = t.cut_nets_ok;
    if (t.cut_net_failing_alpha) rep["cut_net_failing_alpha"] = num17(*t.cut_net_failing_alpha);
    rep["eps_prime"] = num17(t.eps_prime);
    rep["backward_pass"] = t.backward_pass;
    rep["pass"] = t.pass;
    const bool bounded = t.family_net_ok && t.cut_nets_ok && t.pass;
    rep["totally_bounded"] = bounded;
    emit(out_path, rep.dump());
    std::cerr << "tb-audit: " << (bounded ? "pass" : "FAIL") << " (net size "
              << t.family_net_size << ", eps'=" << t.eps_prime << ")\n";
    return bounded ? 0 : 1;
}

int run_extract(const std::string& in_path, const std::string& out_path, double xi,
                std::size_t stages, double eps, std::size_t budget, std::size_t tail) {
    reset(out_path);
    auto [w, limit_ignored] = split_seq_and_limit(load(in_path), tail);
    (void)limit_ignored;
    DiagonalSchedule sched;
    sched.xi = xi;
    sched.net_budget = budget;
    for (std::size_t k = 1; k <= stages; ++k) {
        sched.alpha.push_back(std::min(xi, 1.0 / static_cast<double>(k)) /
                              std::pow(2.0, static_cast<double>(k)));
        sched.eps.push_back(eps / static_cast<double>(k));
    }
    const ExtractionResult r = diagonal_extract(w, sched);
    ordered_json rep;
    rep["kind"] = "extract_report";
    rep["ok"] = r.ok;
    if (!r.ok) {
        rep["error"] = r.error == ExtractionResult::Error::StageNetFailure
                           ? "stage_net_failure"
                           : "window_exhausted";
        rep["failed_stage"] = r.failed_stage;
        if (r.failure_witness) rep["failure_witness"] = *r.failure_witness;
    }
    rep["subsequence"] = r.subsequence;
    ordered_json st = ordered_json::array();
    for (const StageInfo& s : r.stages)
        st.push_back({{"stage", s.stage},
                      {"alpha", num17(s.alpha)},
                      {"eps", num17(s.eps)},
                      {"rep_index", s.rep_index},
                      {"pool_size", s.pool_size},
                      {"residual", num17(s.residual)},
                      {"bound", num17(s.bound)}});
    rep["stages"] = std::move(st);
    ordered_json res = ordered_json::array();
    for (double v : r.final_residuals) res.push_back(num17(v));
    rep["final_residuals"] = std::move(res);
    emit(out_path, rep.dump());
    if (r.ok && r.limit_fuzzy) {
        InstanceMeta meta;
        meta.generator = "extract_limit";
        emit(out_path, emit_record(InstanceRecord::of_fuzzy(*r.limit_fuzzy, meta)));
    }
    std::cerr << "extract: " << (r.ok ? "ok" : "FAIL") << ", " << r.stages.size()
              << " stages, subsequence length " << r.subsequence.size() << "\n";
    return r.ok ? 0 : 1;
}

int run_classify(const std::string& in_path, const std::string& out_path) {
    reset(out_path);
    const auto sets = flatten_fuzzy(load(in_path));
    std::size_t idx = 0;
    for (const auto& u : sets) {
        const ClassReport c = classify(u);
        ordered_json rep;
        rep["kind"] = "class_report";
        rep["index"] = idx++;
        rep["is_usc"] = c.is_usc;
        rep["is_uscg"] = c.is_uscg;
        rep["is_uscb"] = c.is_uscb;
        rep["is_normal"] = c.is_normal;
        rep["height"] = num17(u.height());
        rep["height_attained"] = c.height_attained;
        rep["is_connected_cuts"] = c.is_connected_cuts;
        emit(out_path, rep.dump());
    }
    std::cerr << "classify: " << sets.size() << " members\n";
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"endograph-metric toolkit"};
    app.require_subcommand(1);

    std::string in_path = "-";
    std::string out_path = "-";
    std::string metric = "hend";
    double eps = 0.1;
    std::size_t tail = 0;
    std::string grid_arg;
    std::uint64_t seed = 1;
    double mesh = 1e-3;
    std::size_t budget = 64;

    auto* gen = app.add_subcommand("gen", "generate instances");
    std::string gen_name;
    std::size_t gen_n = 10;
    double gen_spacing = 1.0;
    double gen_r = 0.5;
    std::size_t gen_members = 10;
    gen->add_option("generator", gen_name,
                    "escaping|oscillating|nested|empu|rnce|random")
        ->required();
    gen->add_option("--n", gen_n, "sequence length / index");
    gen->add_option("--spacing", gen_spacing, "escaping spacing");
    gen->add_option("--r", gen_r, "height parameter");
    gen->add_option("--mesh", mesh, "level mesh");
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--members", gen_members, "random family size");
    gen->add_option("--out", out_path, "output path, - for stdout");

    auto* dist = app.add_subcommand("dist", "pairwise distance matrix");
    dist->add_option("--in", in_path, "input path, - for stdin");
    dist->add_option("--out", out_path, "output path");
    dist->add_option("--metric", metric, "hend|hend-max|hausdorff")
        ->check(CLI::IsMember({"hend", "hend-max", "hausdorff"}));

    auto* gamma = app.add_subcommand("gamma-check", "Gamma-convergence check");
    gamma->add_option("--in", in_path, "input path");
    gamma->add_option("--out", out_path, "output path");
    gamma->add_option("--eps", eps, "tolerance");
    gamma->add_option("--tail", tail, "tail start override (1-based)");

    auto* tb = app.add_subcommand("tb-audit", "total-boundedness audit");
    tb->add_option("--in", in_path, "input path");
    tb->add_option("--out", out_path, "output path");
    tb->add_option("--eps", eps, "tolerance");
    tb->add_option("--alpha-grid", grid_arg, "comma-separated levels");
    tb->add_option("--budget", budget, "net size budget");

    auto* extract = app.add_subcommand("extract", "diagonal subsequence extraction");
    double xi = 1.0;
    std::size_t stages = 6;
    extract->add_option("--in", in_path, "input path");
    extract->add_option("--out", out_path, "output path");
    extract->add_option("--xi", xi, "common height lower bound");
    extract->add_option("--stages", stages, "stage count");
    extract->add_option("--eps", eps, "first-stage net radius");
    extract->add_option("--budget", budget, "net size budget");
    extract->add_option("--tail", tail, "tail start override");

    auto* classify_cmd = app.add_subcommand("classify", "class chain per member");
    classify_cmd->add_option("--in", in_path, "input path");
    classify_cmd->add_option("--out", out_path, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return run_gen(gen_name, out_path, seed, gen_n, gen_spacing, gen_r, mesh,
                           gen_members);
        if (dist->parsed()) return run_dist(in_path, out_path, metric);
        if (gamma->parsed()) return run_gamma(in_path, out_path, eps, tail);
        if (tb->parsed()) {
            const auto grid = grid_arg.empty() ? default_grid() : parse_grid(grid_arg);
            return run_tb(in_path, out_path, eps, grid, budget);
        }
        if (extract->parsed())
            return run_extract(in_path, out_path, xi, stages, eps, budget, tail);
        if (classify_cmd->parsed()) return run_classify(in_path, out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace hend
