#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scsa/engine.hpp"
#include "scsa/games.hpp"
#include "scsa/tournament.hpp"

namespace py = pybind11;
using namespace scsa;

namespace {

py::dict stats_dict(const SearchStats& s) {
    py::dict d;
    d["iterations"] = s.iterations;
    d["fm_calls"] = s.fm_calls;
    d["tree_nodes"] = s.tree_nodes;
    d["abstract_nodes"] = s.abstract_nodes;
    d["wall_time_ms"] = s.wall_time_ms;
    d["split_iteration"] = s.split_iteration;
    d["max_group_size"] = s.max_group_size;
    py::list trace;
    for (const auto& row : s.trace) {
        py::dict r;
        r["iteration"] = row.iteration;
        r["ground_nodes"] = row.ground_nodes;
        r["abstract_nodes"] = row.abstract_nodes;
        r["rate"] = row.rate;
        trace.append(r);
    }
    d["trace"] = trace;
    return d;
}

SearchParams params_from_kwargs(GameTag game, const std::string& agent, py::dict overrides) {
    SearchParams p = default_params(game, agent_from_name(agent));
    for (auto item : overrides) {
        const std::string key = py::cast<std::string>(item.first);
        if (key == "n_fm") p.n_fm = py::cast<std::uint64_t>(item.second);
        else if (key == "c") p.c = py::cast<double>(item.second);
        else if (key == "k") p.rollout_len = py::cast<int>(item.second);
        else if (key == "batch") p.batch = py::cast<int>(item.second);
        else if (key == "eta_r") p.eta_r = py::cast<double>(item.second);
        else if (key == "eta_t") p.eta_t = py::cast<double>(item.second);
        else if (key == "size_limit") p.size_limit = py::cast<int>(item.second);
        else if (key == "alpha_es") p.alpha_es = py::cast<std::uint64_t>(item.second);
        else if (key == "seed") p.seed = py::cast<std::uint64_t>(item.second);
        else throw std::invalid_argument("unknown search parameter: " + key);
    }
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Size-constrained state abstraction for MCTS on grid strategy games";

    py::class_<Coord>(m, "Coord")
        .def(py::init<>())
        .def_readwrite("x", &Coord::x)
        .def_readwrite("y", &Coord::y)
        .def("__repr__", [](const Coord& c) {
            return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
        });

    py::class_<Unit>(m, "Unit")
        .def_readonly("id", &Unit::id)
        .def_readonly("owner", &Unit::owner)
        .def_readonly("pos", &Unit::pos)
        .def_readonly("hp", &Unit::hp)
        .def_readonly("acted", &Unit::acted)
        .def_property_readonly("kind", [](const Unit& u) { return std::string(kind_name(u.kind)); });

    py::class_<UnitAction>(m, "UnitAction")
        .def_readonly("actor", &UnitAction::actor)
        .def_property_readonly("verb", [](const UnitAction& a) { return std::string(verb_name(a.verb)); })
        .def("__repr__", &UnitAction::to_string)
        .def("__eq__", [](const UnitAction& a, const UnitAction& b) { return a == b; });

    py::class_<GameState>(m, "GameState")
        .def_readonly("to_move", &GameState::to_move)
        .def_readonly("round", &GameState::round)
        .def_readonly("units", &GameState::units)
        .def_property_readonly("gold", [](const GameState& s) {
            return py::make_tuple(s.gold[0], s.gold[1]);
        })
        .def("serialize", &GameState::serialize)
        .def("fingerprint", &GameState::fingerprint)
        .def("__eq__", [](const GameState& a, const GameState& b) { return a == b; });

    m.def("load_game", [](const std::string& game, const std::string& config_dir) {
        return load_game(game_from_name(game), config_dir);
    }, py::arg("game"), py::arg("config_dir") = "");

    py::class_<GameConfig, std::shared_ptr<GameConfig>>(m, "GameConfig")
        .def_property_readonly("game", [](const GameConfig& c) { return std::string(game_name(c.tag)); })
        .def_readonly("round_limit", &GameConfig::round_limit)
        .def("to_json", &GameConfig::to_json_string);

    m.def("initial_state", [](std::shared_ptr<GameConfig> cfg) {
        return make_initial_state(cfg);
    });
    m.def("generate_position", [](std::shared_ptr<GameConfig> cfg, std::uint64_t seed) {
        return generate_position(cfg, seed);
    });

    m.def("legal_actions", [](const GameState& s) { return legal_actions(s, kAnyActor); });
    m.def("legal_actions_for", &legal_actions_for);
    m.def("apply_action", &apply_action);
    m.def("outcome", [](const GameState& s) {
        const Outcome o = terminal_outcome(s);
        py::dict d;
        d["terminal"] = o.terminal();
        d["winner"] = o.kind == Outcome::Kind::Win ? py::cast(o.winner) : py::none();
        d["draw"] = o.kind == Outcome::Kind::Draw;
        return d;
    });
    m.def("score_for", [](const GameState& s, int player) {
        return terminal_outcome(s).score_for(player);
    });

    m.def("heuristic", &heuristic);
    m.def("rule_based_policy", &rule_based_policy);
    m.def("joint_action_count", &enumerate_joint_action_count);

    m.def("search", [](const GameState& root, const std::string& agent, py::dict overrides) {
        const SearchParams p = params_from_kwargs(root.cfg->tag, agent, overrides);
        const UnitOrdering ordering = [&] {
            if (p.mode == SearchMode::Plain) return UnitOrdering{};
            Rng rng(mix_seed(p.seed, 0xa11ce + root.to_move));
            return make_unit_ordering(root, root.to_move, rng);
        }();
        SearchStats stats;
        const UnitAction action =
            run_search(root, p, p.mode == SearchMode::Plain ? nullptr : &ordering, &stats);
        return py::make_tuple(action, stats_dict(stats));
    }, py::arg("root"), py::arg("agent") = "scsa", py::arg("params") = py::dict());

    m.def("search_debug", [](const GameState& root, const std::string& agent, py::dict overrides) {
        const SearchParams p = params_from_kwargs(root.cfg->tag, agent, overrides);
        const UnitOrdering ordering = [&] {
            if (p.mode == SearchMode::Plain) return UnitOrdering{};
            Rng rng(mix_seed(p.seed, 0xa11ce + root.to_move));
            return make_unit_ordering(root, root.to_move, rng);
        }();
        SearchContext ctx(root, p, p.mode == SearchMode::Plain ? nullptr : &ordering);
        ctx.run();
        const auto& nodes = ctx.nodes();
        py::list edges;
        for (const auto& e : nodes[0].edges) {
            if (e.child < 0) continue;
            const auto& c = nodes[e.child];
            py::dict d;
            d["action"] = e.action.to_string();
            d["visits"] = c.visits;
            d["q"] = c.visits ? c.value / c.visits : 0.0;
            edges.append(d);
        }
        return edges;
    }, py::arg("root"), py::arg("agent") = "scsa", py::arg("params") = py::dict());

    m.def("play_match", [](const std::string& game, const std::string& agent_a,
                           const std::string& agent_b, std::uint64_t seed,
                           std::int64_t position_seed, const std::string& config_dir) {
        MatchSpec spec;
        spec.game = game_from_name(game);
        spec.agent_a = AgentSpec::make(spec.game, agent_a);
        spec.agent_b = AgentSpec::make(spec.game, agent_b);
        spec.match_seed = seed;
        spec.position_seed = position_seed;
        spec.config_dir = config_dir;
        const MatchResult r = run_match(spec, false);
        py::dict d;
        d["winner"] = std::string(MatchResult::winner_name(r.winner));
        d["rounds"] = r.rounds;
        d["fm_calls"] = r.total_fm_calls;
        return d;
    }, py::arg("game"), py::arg("agent_a"), py::arg("agent_b"), py::arg("seed") = 1,
       py::arg("position_seed") = -1, py::arg("config_dir") = "");
}
