#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "loud/bench.hpp"
#include "loud/cegis.hpp"
#include "loud/oracle.hpp"
#include "loud/parser.hpp"
#include "loud/report.hpp"
#include "loud/transformers.hpp"

namespace py = pybind11;
using namespace loud;

namespace {

Mode parse_mode(const std::string& m) {
    if (m == "over") return Mode::Over;
    if (m == "under") return Mode::Under;
    throw py::value_error("mode must be 'over' or 'under'");
}

// Reports as JSON text; the Python wrapper decodes them.
std::string run_json(const std::string& text, const std::optional<std::string>& mode,
                     std::optional<int64_t> timeoutMs, bool hCache, bool oracleCheck) {
    const LoudProblem p = parse_problem(text);
    SearchConfig cfg = p.config;
    if (timeoutMs) cfg.timeoutMillis = *timeoutMs;
    cfg.hCacheEnabled = hCache;
    cfg.validate();
    Mode m;
    if (mode)
        m = parse_mode(*mode);
    else if (p.transformer != TransformerKind::None)
        m = transformer_is_over(p.transformer) ? Mode::Over : Mode::Under;
    else
        m = p.grammarOver ? Mode::Over : Mode::Under;
    const Universe u(p);
    SynthesisReport r;
    {
        py::gil_scoped_release release;
        r = synthesize_report(u, m, cfg);
    }
    std::optional<OracleVerdict> verdict;
    if (oracleCheck) verdict = oracle_check(u, r, cfg.enumerationCap, cfg.oraclePairCap);
    return emit_json(make_document(p, r, verdict));
}

py::dict problem_info(const std::string& text) {
    const LoudProblem p = parse_problem(text);
    py::list freeVars, hiddenVars;
    for (int i : p.free_vars()) freeVars.append(p.vars[i].name);
    for (int i : p.hidden_vars()) hiddenVars.append(p.vars[i].name);
    py::dict d;
    d["name"] = p.name;
    d["free"] = freeVars;
    d["hidden"] = hiddenVars;
    d["examples"] = example_domain(p).size();
    d["hidden_instances"] = hidden_domain(p).size();
    d["transformer"] = std::string(transformer_name(p.transformer));
    d["has_over"] = p.grammarOver.has_value();
    d["has_under"] = p.grammarUnder.has_value();
    return d;
}

py::list positive_examples(const std::string& text) {
    const LoudProblem p = parse_problem(text);
    const Universe u(p);
    const Bitset pos = oracle_positive_set(u, p.config.oraclePairCap);
    py::list out;
    pos.for_each([&](size_t e) { out.append(u.example_text(e)); });
    return out;
}

py::dict bench_problem(const std::string& name, bool hCache) {
    BenchOptions o;
    o.hCache = hCache;
    const BenchResult r = run_bench_problem(name, o);
    py::list checks;
    for (auto& c : r.checks) {
        py::dict d;
        d["name"] = c.name;
        d["pass"] = c.pass;
        d["detail"] = c.detail;
        checks.append(d);
    }
    py::dict d;
    d["problem"] = r.problem;
    d["pass"] = r.pass();
    d["checks"] = checks;
    return d;
}

}  // namespace

PYBIND11_MODULE(_loud, m) {
    m.doc() = "Best L-consequences and L-implicants of existential queries";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    m.def("run_json", &run_json, py::arg("text"), py::arg("mode") = py::none(), py::arg("timeout_ms") = py::none(),
          py::arg("h_cache") = true, py::arg("oracle_check") = false);
    m.def("problem_info", &problem_info, py::arg("text"));
    m.def("positive_examples", &positive_examples, py::arg("text"));
    m.def("bench_problem", &bench_problem, py::arg("name"), py::arg("h_cache") = true);
    m.def("bench_pack", &bench_pack, py::arg("pack"));
    m.def("load_problem_text", &load_problem_text, py::arg("ref"));
    m.def("bundled_problems", [] {
        std::vector<std::string> names;
        for (auto& p : embedded_problems()) names.emplace_back(p.name);
        return names;
    });
}
