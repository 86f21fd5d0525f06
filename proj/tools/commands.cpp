// Copyright 2026 The ghzbox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <set>

#include "CLI11.hpp"
#include "ghzbox/boxbasis.hpp"
#include "ghzbox/entangler.hpp"
#include "ghzbox/epr.hpp"
#include "ghzbox/errors.hpp"
#include "ghzbox/measurement.hpp"

namespace ghzbox::cli {

namespace {

Json complex_json(Amplitude a) {
    // Avoid printing -0.
    const double re = a.real() == 0.0 ? 0.0 : a.real();
    const double im = a.imag() == 0.0 ? 0.0 : a.imag();
    return Json{{"re", re}, {"im", im}};
}

std::string complex_text(Amplitude a) { return fmt::format("{:+.6f} {:+.6f}i", a.real() + 0.0, a.imag() + 0.0); }

std::string str(std::string_view s) { return std::string(s); }

Json label_list(const std::vector<PropertyDistribution>& ds) {
    Json out = Json::array();
    for (const auto& d : ds) out.push_back(d.to_string());
    return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) out += sep;
        out += parts[k];
    }
    return out;
}

std::vector<std::string> names_of(const std::vector<PropertyDistribution>& ds) {
    std::vector<std::string> out;
    for (const auto& d : ds) out.push_back(d.to_string());
    return out;
}

std::string pairing_name(const RuleTable& t) {
    return str(to_string(t.first_box)) + str(to_string(t.second_box)) + "->" + str(to_string(t.target_box));
}

Json rule_json(const PairRule& rule) {
    Json out;
    out["measured_basis"] = str(to_string(rule.measured_basis));
    out["target_basis"] = str(to_string(rule.target_basis));
    const auto same = rule.by_parity(Parity::Same);
    const auto diff = rule.by_parity(Parity::Different);
    out["same"] = same ? Json(str(to_string(*same))) : Json(nullptr);
    out["different"] = diff ? Json(str(to_string(*diff))) : Json(nullptr);
    out["symmetric"] = true;  // derive_pair_rule throws otherwise
    out["pairings_checked"] = static_cast<int>(rule.pairings.size());
    Json pairings = Json::array();
    for (const RuleTable& t : rule.pairings) {
        Json rows = Json::array();
        for (const RuleRow& r : t.rows) {
            rows.push_back({{"first", str(to_string(r.first))},
                            {"second", str(to_string(r.second))},
                            {"reachable", r.reachable()},
                            {"target", r.target ? Json(str(to_string(*r.target))) : Json(nullptr)},
                            {"probability", r.target_probability}});
        }
        pairings.push_back({{"pairing", pairing_name(t)}, {"rows", rows}});
    }
    out["pairings"] = pairings;
    return out;
}

int count_certain(const PairRule& rule) {
    int n = 0;
    for (const RuleTable& t : rule.pairings) {
        for (const RuleRow& r : t.rows) {
            if (r.reachable() && r.target && r.target_probability >= kCertaintyThreshold) ++n;
        }
    }
    return n;
}

std::string expand_anchor(const std::vector<Basis>& frames) {
    const std::vector<Basis> pos3(3, Basis::Position);
    const std::vector<Basis> phase3(3, Basis::Phase);
    const std::vector<Basis> bbp{Basis::Bonding, Basis::Bonding, Basis::Position};
    if (frames == pos3) return "Eq. (3a) first";
    if (frames == bbp) return "Eq. (3a) second";
    if (frames == phase3) return "Eq. (3)";
    return "Eq. (3) re-expanded";
}

Json state_json(const BoxState& s) {
    Json frame = Json::array();
    for (Basis b : s.frame()) frame.push_back(str(to_string(b)));
    Json amps = Json::array();
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        Json entry = complex_json(s[i]);
        entry["label"] = joint_label_string(joint_labels(i, s.frame()));
        amps.push_back(entry);
    }
    return Json{{"frame", frame}, {"amplitudes", amps}};
}

}  // namespace

Json RunReport::to_json() const {
    return Json{{"command", command}, {"inputs", inputs}, {"outputs", outputs}, {"paper_anchor", paper_anchor}};
}

RunReport cmd_expand(const std::vector<std::string>& frame_names, const GlobalOptions& opts) {
    if (frame_names.size() != 3) {
        throw UsageError("expand takes exactly 3 basis names (position, bonding or phase), got " +
                         std::to_string(frame_names.size()));
    }
    std::vector<Basis> frames;
    for (const std::string& name : frame_names) {
        const auto b = parse_basis(name);
        if (!b) throw UsageError("unknown basis '" + name + "' (expected position, bonding or phase)");
        frames.push_back(*b);
    }
    // Source in the all-phase frame.
    const std::vector<Basis> phase3(3, Basis::Phase);
    const BoxState source = reframe(ghz_state(), phase3);
    const Expansion e = expand_in(source, frames, opts.tolerance);

    RunReport rep;
    rep.command = "expand";
    rep.paper_anchor = expand_anchor(frames);
    rep.inputs["frames"] = frame_names;
    rep.inputs["tolerance"] = opts.tolerance;
    Json terms = Json::array();
    for (const ProductTerm& t : e.terms) {
        Json labels = Json::array();
        for (Label l : t.labels) labels.push_back(str(to_string(l)));
        terms.push_back({{"labels", labels}, {"label", joint_label_string(t.labels)}, {"coefficient", complex_json(t.coefficient)}});
    }
    rep.outputs["terms"] = terms;
    rep.outputs["term_count"] = static_cast<int>(e.terms.size());
    rep.outputs["raw_products"] = e.raw_products;
    rep.outputs["cancelled_labels"] = e.cancelled_labels;

    rep.text.push_back(fmt::format("three-box state in frames ({})", join(frame_names, ", ")));
    for (const ProductTerm& t : e.terms) {
        rep.text.push_back(fmt::format("  {:<10} {}", joint_label_string(t.labels), complex_text(t.coefficient)));
    }
    rep.text.push_back(fmt::format("raw products: {}, surviving terms: {}, cancelled labels: {}", e.raw_products,
                                   e.terms.size(), e.cancelled_labels));
    return rep;
}

RunReport cmd_rules(const GlobalOptions& /*opts*/) {
    const BoxState ghz = ghz_state();
    const PairRule position = derive_pair_rule(ghz, Basis::Position, Basis::Position);
    const PairRule bonding = derive_pair_rule(ghz, Basis::Bonding, Basis::Position);

    RunReport rep;
    rep.command = "rules";
    rep.paper_anchor = "Sec. VII.1 and VII.3 rules";
    rep.outputs["position"] = rule_json(position);
    rep.outputs["bonding"] = rule_json(bonding);
    rep.outputs["symmetric"] = true;
    rep.outputs["certain_predictions"] = count_certain(position) + count_certain(bonding);

    for (const auto* rule : {&position, &bonding}) {
        rep.text.push_back(fmt::format("{} pair -> {} of third box: same -> {}, different -> {} (3 pairings agree)",
                                       to_string(rule->measured_basis), to_string(rule->target_basis),
                                       to_string(*rule->by_parity(Parity::Same)),
                                       to_string(*rule->by_parity(Parity::Different))));
    }
    rep.text.push_back(fmt::format("certain predictions: {}", count_certain(position) + count_certain(bonding)));
    return rep;
}

RunReport cmd_epr(const GlobalOptions& /*opts*/) {
    const BoxState ghz = ghz_state();
    const auto set_a = reality_distributions(derive_pair_rule(ghz, Basis::Position, Basis::Position));
    const auto set_b = reality_distributions(derive_pair_rule(ghz, Basis::Bonding, Basis::Position));
    const auto common = intersection(set_a, set_b);
    const bool contradiction = contradiction_check(set_a, set_b);
    const ParityCertificate cert = parity_certificate(ghz);

    RunReport rep;
    rep.command = "epr";
    rep.paper_anchor = "Eqs. (4a), (4b); Sec. VIII";
    rep.outputs["set_4a"] = label_list(set_a);
    rep.outputs["set_4b"] = label_list(set_b);
    rep.outputs["intersection"] = label_list(common);
    rep.outputs["contradiction"] = contradiction;

    Json parity;
    auto members = [](const std::vector<SignedDistribution>& ms) {
        Json out = Json::array();
        for (const auto& m : ms) out.push_back({{"distribution", m.distribution.to_string()}, {"product", m.product}});
        return out;
    };
    parity["position_rule_is_parity_law"] = cert.position_rule_is_parity_law;
    parity["bonding_rule_is_parity_law"] = cert.bonding_rule_is_parity_law;
    parity["position_members"] = members(cert.position_members);
    parity["bonding_members"] = members(cert.bonding_members);
    parity["position_product"] = cert.position_product;
    parity["bonding_product"] = cert.bonding_product;
    parity["clash"] = cert.clash;
    parity["report"] = cert.report;
    rep.outputs["parity"] = parity;

    rep.text.push_back("positions implied by position measurements: " + join(names_of(set_a), ", "));
    rep.text.push_back("positions implied by bonding measurements:  " + join(names_of(set_b), ", "));
    rep.text.push_back("common distributions: " + (common.empty() ? std::string("none") : join(names_of(common), ", ")));
    rep.text.push_back(std::string("contradiction: ") + (contradiction ? "yes" : "no"));
    for (const std::string& line : cert.report) rep.text.push_back("  " + line);
    return rep;
}

RunReport cmd_lhv(const GlobalOptions& /*opts*/) {
    const BoxState ghz = ghz_state();
    const LhvScanResult all = lhv_scan(ghz, kAllConstraintFamilies);

    RunReport rep;
    rep.command = "lhv";
    rep.paper_anchor = "Sec. VIII";
    rep.outputs["total"] = all.total;
    rep.outputs["survivors"] = static_cast<int>(all.survivors.size());
    Json survivors = Json::array();
    for (const auto& h : all.survivors) survivors.push_back(h.to_string());
    rep.outputs["survivor_assignments"] = survivors;
    Json violations = Json::object();
    for (ConstraintFamily f : kAllConstraintFamilies) violations[str(to_string(f))] = all.violations.at(f);
    rep.outputs["violations_by_family"] = violations;

    Json single = Json::object();
    for (ConstraintFamily f : kAllConstraintFamilies) {
        const std::array<ConstraintFamily, 1> only{f};
        single[str(to_string(f))] = static_cast<int>(lhv_scan(ghz, only).survivors.size());
    }
    rep.outputs["single_family_survivors"] = single;

    Json entries = Json::array();
    for (const ScanEntry& e : all.entries) {
        Json violated = Json::array();
        for (ConstraintFamily f : e.violated) violated.push_back(str(to_string(f)));
        entries.push_back({{"assignment", e.assignment.to_string()}, {"violated", violated}});
    }
    rep.outputs["assignments"] = entries;

    rep.text.push_back(fmt::format("hidden assignments scanned: {}", all.total));
    rep.text.push_back(fmt::format("survivors under all constraints: {}", all.survivors.size()));
    for (ConstraintFamily f : kAllConstraintFamilies) {
        rep.text.push_back(fmt::format("  {:<9} rules alone: {:>2} survivors, {:>2} assignments violate them",
                                       to_string(f), single[str(to_string(f))].get<int>(), all.violations.at(f)));
    }
    return rep;
}

RunReport cmd_measure(const std::string& state_name, const std::vector<std::string>& script, bool allow_repeat,
                      const GlobalOptions& opts) {
    if (!opts.seed) throw UsageError("measure needs --seed <u64>");
    BoxState state = [&] {
        if (state_name == "ghz") return ghz_state();
        if (state_name == "two-box") return two_box_correlated();
        throw UsageError("unknown state '" + state_name + "' (expected ghz or two-box)");
    }();
    if (script.empty()) throw UsageError("measure needs at least one BOX:BASIS step");

    struct Step {
        Box box;
        Basis basis;
    };
    std::vector<Step> steps;
    for (const std::string& item : script) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw UsageError("step '" + item + "' is not BOX:BASIS");
        const auto box = parse_box(item.substr(0, colon));
        const auto basis = parse_basis(item.substr(colon + 1));
        if (!box || !basis) throw UsageError("step '" + item + "' is not BOX:BASIS");
        if (index_of(*box) >= state.n_boxes()) {
            throw UsageError("box " + str(to_string(*box)) + " is not part of the " + state_name + " state");
        }
        const bool repeated =
            std::any_of(steps.begin(), steps.end(), [&](const Step& s) { return s.box == *box; });
        if (repeated && !allow_repeat) {
            throw UsageError("box " + str(to_string(*box)) + " measured twice; pass --allow-repeat to permit this");
        }
        steps.push_back({*box, *basis});
    }

    RunReport rep;
    rep.command = "measure";
    rep.paper_anchor = state_name == "two-box" ? "Eqs. (2a), (2b)" : "Sec. VII.1";
    rep.inputs["state"] = state_name;
    rep.inputs["script"] = script;
    rep.inputs["seed"] = *opts.seed;
    rep.inputs["allow_repeat"] = allow_repeat;

    std::mt19937_64 rng(*opts.seed);
    Json outcomes = Json::array();
    std::set<Box> measured;
    for (const Step& step : steps) {
        const double p_before =
            outcome_probabilities(state, step.box, step.basis)[0];
        SampledOutcome sample = sample_measure(state, step.box, step.basis, rng);
        const double p = index_of(sample.outcome) == 0 ? p_before : 1.0 - p_before;
        outcomes.push_back({{"box", str(to_string(step.box))},
                            {"basis", str(to_string(step.basis))},
                            {"outcome", str(to_string(sample.outcome))},
                            {"probability", p}});
        rep.text.push_back(fmt::format("measure {} in {} basis -> {} (p = {:.6f})", to_string(step.box),
                                       to_string(step.basis), to_string(sample.outcome), p));
        state = std::move(sample.state);
        measured.insert(step.box);
    }
    rep.outputs["outcomes"] = outcomes;

    Json predictions = Json::array();
    for (int k = 0; k < state.n_boxes(); ++k) {
        const Box box = kAllBoxes[static_cast<std::size_t>(k)];
        if (measured.count(box)) continue;
        for (Basis b : kAllBases) {
            const std::vector<MeasurementRecord> none;
            const Prediction pred = predict_remaining(state, none, box, b);
            const auto labels = labels_of(b);
            Json probs = Json::object();
            probs[str(to_string(labels[0]))] = pred.probabilities[0];
            probs[str(to_string(labels[1]))] = pred.probabilities[1];
            predictions.push_back({{"box", str(to_string(box))},
                                   {"basis", str(to_string(b))},
                                   {"certain", pred.certain ? Json(str(to_string(*pred.certain))) : Json(nullptr)},
                                   {"probabilities", probs}});
            rep.text.push_back(
                pred.certain
                    ? fmt::format("  box {} {}: certain {}", to_string(box), to_string(b), to_string(*pred.certain))
                    : fmt::format("  box {} {}: {} {:.6f}, {} {:.6f}", to_string(box), to_string(b),
                                  to_string(labels[0]), pred.probabilities[0], to_string(labels[1]),
                                  pred.probabilities[1]));
        }
    }
    rep.outputs["predictions"] = predictions;
    rep.outputs["state"] = state_json(state);
    return rep;
}

RunReport cmd_waveform(const std::string& figure, int resolution, const std::string& out_path,
                       const FigureOptions& figure_options, const GlobalOptions& /*opts*/) {
    const auto fig = parse_figure(figure);
    if (!fig) throw UsageError("unknown figure '" + figure + "' (expected fig2, fig9 or fig10)");
    if (resolution < kMinFigureResolution) {
        throw UsageError("--resolution must be at least " + std::to_string(kMinFigureResolution));
    }
    FigureData data;
    try {
        data = emit_figure_data(*fig, resolution, figure_options);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + out_path + "' for writing");
    write_csv(file, data);
    file.close();
    if (!file) throw IoError("failed writing '" + out_path + "'");

    RunReport rep;
    rep.command = "waveform";
    rep.paper_anchor = *fig == Figure::Fig2 ? "Fig. 2" : (*fig == Figure::Fig9 ? "Fig. 9" : "Fig. 10");
    rep.inputs["figure"] = figure;
    rep.inputs["resolution"] = resolution;
    rep.inputs["out"] = out_path;
    rep.outputs["path"] = out_path;
    rep.outputs["rows"] = static_cast<int>(data.rows.size());
    rep.outputs["series"] = data.series;
    rep.outputs["columns"] = data.dims == 3 ? Json{"series", "x", "y", "z", "psi_re", "psi_im", "density"}
                                            : Json{"series", "x", "psi_re", "psi_im", "density"};
    rep.text.push_back(fmt::format("wrote {} rows ({}) to {}", data.rows.size(), join(data.series, ", "), out_path));
    if (data.overlap) {
        rep.inputs["separation"] = *data.separation;
        rep.outputs["overlap"] = *data.overlap;
        rep.outputs["overlap_threshold"] = data.overlap_threshold;
        rep.outputs["orthogonal"] = *data.overlap < data.overlap_threshold;
        rep.text.push_back(fmt::format("1s-1s overlap at separation {} a0: {:.6e} ({} threshold {})", *data.separation,
                                       *data.overlap, *data.overlap < data.overlap_threshold ? "below" : "above",
                                       data.overlap_threshold));
    }
    return rep;
}

void print_report(std::ostream& out, const RunReport& report, bool json) {
    if (json) {
        out << report.to_json().dump(2) << '\n';
        return;
    }
    for (const std::string& line : report.text) out << line << '\n';
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Three-box entanglement simulator and reality-criterion verifier", "ghzbox"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    app.add_flag("--json", opts.json, "Print the machine-readable JSON report");
    std::uint64_t seed = 0;
    auto* seed_opt = app.add_option("--seed", seed, "Seed for sampling commands (u64)");
    app.add_option("--tolerance", opts.tolerance, "Amplitude tolerance for cancellation")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> frames;
    auto* expand = app.add_subcommand("expand", "Expand the three-box state in per-box bases");
    expand->add_option("frames", frames, "Three basis names: position, bonding or phase")->required()->expected(3);

    auto* rules = app.add_subcommand("rules", "Derive the pair rules from certain predictions");
    auto* epr = app.add_subcommand("epr", "Property sets, their contradiction and the parity certificate");
    auto* lhv = app.add_subcommand("lhv", "Exhaustive scan over local hidden assignments");

    std::string state_name = "ghz";
    std::vector<std::string> script;
    bool allow_repeat = false;
    auto* measure = app.add_subcommand("measure", "Sample a sequence of measurements");
    measure->add_option("--state", state_name, "ghz or two-box")->capture_default_str();
    measure->add_option("steps", script, "Steps BOX:BASIS, e.g. A:position B:bonding")->required();
    measure->add_flag("--allow-repeat", allow_repeat, "Allow measuring a box more than once");

    std::string figure;
    int resolution = 256;
    std::string out_path;
    FigureOptions fig_opts;
    auto* waveform = app.add_subcommand("waveform", "Write plot data for a figure as CSV");
    waveform->add_option("figure", figure, "fig2, fig9 or fig10")->required();
    waveform->add_option("--resolution", resolution, "Samples per axis (>= 16)")->capture_default_str();
    waveform->add_option("--out", out_path, "Output CSV path")->required();
    waveform->add_option("--separation", fig_opts.orbitals.separation, "Internuclear separation in Bohr radii (fig10)")
        ->capture_default_str();
    waveform->add_option("--well-width", fig_opts.well.well_width, "Square well width")->capture_default_str();
    waveform->add_option("--gap", fig_opts.well.gap, "Gap between the wells")->capture_default_str();
    waveform->add_option("--n", fig_opts.well.quantum_number, "Square well quantum number")->capture_default_str();
    waveform->add_option("--overlap-threshold", fig_opts.overlap_threshold, "Overlap treated as orthogonal")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (*seed_opt) opts.seed = seed;

    try {
        RunReport report;
        if (*expand) {
            report = cmd_expand(frames, opts);
        } else if (*rules) {
            report = cmd_rules(opts);
        } else if (*epr) {
            report = cmd_epr(opts);
        } else if (*lhv) {
            report = cmd_lhv(opts);
        } else if (*measure) {
            report = cmd_measure(state_name, script, allow_repeat, opts);
        } else if (*waveform) {
            report = cmd_waveform(figure, resolution, out_path, fig_opts, opts);
        }
        print_report(out, report, opts.json);
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace ghzbox::cli
