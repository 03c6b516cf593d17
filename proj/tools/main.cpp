// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
//
// vertexlearn command-line driver: simulate learner/teacher sessions, dump
// oracles and teaching sets, run bench suites, and serve or drive sessions
// over TCP.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vertexlearn/bench.hpp"
#include "vertexlearn/net.hpp"
#include "vertexlearn/session.hpp"
#include "vertexlearn/teaching.hpp"

namespace vl = vertexlearn;

namespace {

constexpr int kExitFinished = 0;
constexpr int kExitFailure = 1;
constexpr int kExitProtocol = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitUsage = 4;
constexpr int kExitNetwork = 5;

vl::BaseConcept base_concept_from(const std::string& name) {
    if (name == "vc") return vl::BaseConcept::VertexCover;
    if (name == "is") return vl::BaseConcept::IndependentSet;
    if (name == "ds") return vl::BaseConcept::DominatingSet;
    throw vl::UsageError("unknown concept: " + name);
}

vl::Concept concept_from(const std::string& name, int k) {
    vl::BaseConcept base = base_concept_from(name);
    return k > 0 ? vl::Concept::exactly(base, k) : vl::Concept::all(base);
}

vl::Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw vl::UsageError("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return vl::Graph::parse_text(buf.str());
}

vl::Graph random_graph_from_arg(const std::string& arg) {
    // N,P,SEED
    std::istringstream in(arg);
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    char c1 = 0, c2 = 0;
    if (!(in >> n >> c1 >> p >> c2 >> seed) || c1 != ',' || c2 != ',' || !in.eof())
        throw vl::UsageError("--random expects N,P,SEED: " + arg);
    return vl::Graph::random(n, p, seed);
}

vl::LearnerKind pick_learner(const vl::Concept& target_concept, const std::string& algo) {
    switch (target_concept.base) {
        case vl::BaseConcept::VertexCover:
            if (!target_concept.exact_size) return vl::LearnerKind::VertexCover;
            if (algo == "wrapper") return vl::LearnerKind::VertexCover;
            if (algo.empty() || algo == "tree") return vl::LearnerKind::FixedVertexCoverTree;
            throw vl::UsageError("unknown algo: " + algo);
        case vl::BaseConcept::IndependentSet:
            if (!algo.empty() && algo != "wrapper")
                throw vl::UsageError("independent sets support only the wrapper algo");
            return vl::LearnerKind::IndependentSet;
        case vl::BaseConcept::DominatingSet:
            if (target_concept.exact_size) throw vl::UsageError("no fixed-cardinality dominating-set learner");
            if (!algo.empty()) throw vl::UsageError("dominating sets take no --algo");
            return vl::LearnerKind::DominatingSet;
    }
    throw vl::UsageError("unknown concept");
}

void write_transcript(const std::string& path, const vl::Transcript& transcript) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw vl::UsageError("cannot write transcript file: " + path);
    out << transcript.to_jsonl();
}

void print_session_summary(const vl::SessionResult& result, const vl::Concept& target_concept, vl::LearnerKind learner,
                           int n) {
    vl::Json summary = vl::Json::object();
    summary["outcome"] = result.transcript.outcome;
    summary["learner"] = vl::to_string(learner);
    summary["concept"] = vl::to_string(target_concept.base);
    if (target_concept.exact_size) summary["k"] = *target_concept.exact_size;
    summary["n"] = n;
    summary["equivalence_queries"] = result.transcript.equivalence_count;
    summary["membership_queries"] = result.transcript.membership_count;
    summary["rounds"] = result.transcript.rounds.size();
    summary["hypothesis"] = vl::hypothesis_to_json(result.final_hypothesis);
    std::cout << summary.dump() << "\n";
}

int dispatch(CLI::App& app, int argc, char** argv);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"learning and teaching vertex-set concepts in graphs"};
    app.require_subcommand(1);
    try {
        return dispatch(app, argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitFinished : kExitUsage;
    } catch (const vl::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const vl::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const vl::RangeError& e) {
        std::cerr << "range error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const vl::ContractError& e) {
        std::cerr << "invalid request: " << e.what() << "\n";
        return kExitUsage;
    } catch (const vl::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const vl::QueryRejected& e) {
        std::cerr << "protocol violation: " << e.what() << "\n";
        return kExitProtocol;
    } catch (const vl::ProtocolViolation& e) {
        std::cerr << "protocol violation: " << e.what() << "\n";
        return kExitProtocol;
    } catch (const vl::NetworkError& e) {
        std::cerr << "network error: " << e.what() << "\n";
        return kExitNetwork;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

namespace {

int dispatch(CLI::App& app, int argc, char** argv) {
    // run
    auto* run = app.add_subcommand("run", "simulate a learner/teacher session in-process");
    std::string run_concept, run_graph, run_random, run_policy = "min-card", run_transcript, run_algo;
    int run_k = 0;
    std::uint64_t run_seed = 0;
    long run_max_rounds = 0;
    run->add_option("--concept", run_concept, "vc|is|ds")->required();
    run->add_option("--k", run_k, "restrict to sets of this exact cardinality");
    auto* g_opt = run->add_option("--graph", run_graph, "secret graph file");
    auto* r_opt = run->add_option("--random", run_random, "random secret: N,P,SEED");
    g_opt->excludes(r_opt);
    run->add_option("--policy", run_policy, "lex-min|lex-max|min-card|max-card|random");
    run->add_option("--seed", run_seed, "seed for the random policy");
    run->add_option("--transcript", run_transcript, "write the transcript as JSONL");
    run->add_option("--max-rounds", run_max_rounds, "abort after this many rounds");
    run->add_option("--algo", run_algo, "for --k with vc: tree (default) or wrapper");

    // teach
    auto* teach = app.add_subcommand("teach", "emit the pair-based teaching set of a graph");
    std::string teach_concept, teach_graph;
    teach->add_option("--concept", teach_concept, "vc|is")->required();
    teach->add_option("--graph", teach_graph, "graph file")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "dump solution sets and related oracles");
    std::string oracle_concept, oracle_graph;
    int oracle_k = 0;
    oracle->add_option("--concept", oracle_concept, "vc|is|ds")->required();
    oracle->add_option("--k", oracle_k, "restrict to sets of this exact cardinality");
    oracle->add_option("--graph", oracle_graph, "graph file")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "run a deterministic benchmark suite");
    std::string bench_suite, bench_out;
    bench->add_option("--suite", bench_suite, "vc-rounds|is-rounds|ds-rounds|kvc-independence|lemma25|teaching")
        ->required();
    bench->add_option("--out", bench_out, "output CSV path")->required();

    // serve
    auto* serve = app.add_subcommand("serve", "serve teacher sessions over TCP");
    std::string serve_listen, serve_graph, serve_concept, serve_policy = "min-card";
    int serve_k = 0;
    std::uint64_t serve_seed = 0;
    serve->add_option("--listen", serve_listen, "HOST:PORT")->required();
    serve->add_option("--graph", serve_graph, "secret graph file")->required();
    serve->add_option("--concept", serve_concept, "vc|is|ds")->required();
    serve->add_option("--k", serve_k, "restrict to sets of this exact cardinality");
    serve->add_option("--policy", serve_policy, "counterexample policy");
    serve->add_option("--seed", serve_seed, "seed for the random policy");

    // learn
    auto* learn = app.add_subcommand("learn", "drive a learner against a served teacher");
    std::string learn_connect, learn_concept, learn_transcript, learn_algo;
    int learn_k = 0, learn_n = 0;
    long learn_max_rounds = 0;
    learn->add_option("--connect", learn_connect, "HOST:PORT")->required();
    learn->add_option("--concept", learn_concept, "vc|is|ds")->required();
    learn->add_option("--k", learn_k, "restrict to sets of this exact cardinality");
    learn->add_option("--n", learn_n, "order of the secret graph")->required();
    learn->add_option("--transcript", learn_transcript, "write the transcript as JSONL");
    learn->add_option("--max-rounds", learn_max_rounds, "abort after this many rounds");
    learn->add_option("--algo", learn_algo, "for --k with vc: tree (default) or wrapper");

    app.parse(argc, argv);

    if (run->parsed()) {
        if (run_graph.empty() == run_random.empty())
            throw vl::UsageError("provide exactly one of --graph and --random");
        vl::Graph secret = run_graph.empty() ? random_graph_from_arg(run_random) : load_graph(run_graph);
        vl::Concept target_concept = concept_from(run_concept, run_k);
        vl::SessionConfig cfg;
        cfg.target_concept = target_concept;
        cfg.learner = pick_learner(target_concept, run_algo);
        cfg.policy = {vl::policy_from_string(run_policy), run_seed};
        cfg.max_rounds = run_max_rounds;
        vl::SessionResult result = vl::run_session(cfg, secret);
        if (!run_transcript.empty()) write_transcript(run_transcript, result.transcript);
        print_session_summary(result, target_concept, cfg.learner, secret.order());
        return kExitFinished;
    }

    if (teach->parsed()) {
        vl::Graph g = load_graph(teach_graph);
        vl::BaseConcept base = base_concept_from(teach_concept);
        vl::ExampleSet ex;
        if (base == vl::BaseConcept::VertexCover)
            ex = vl::teaching_set_vc(g);
        else if (base == vl::BaseConcept::IndependentSet)
            ex = vl::teaching_set_is(g);
        else
            throw vl::UsageError("teaching sets exist for vc and is only");
        std::cout << ex.to_json().dump() << "\n";
        return kExitFinished;
    }

    if (oracle->parsed()) {
        vl::Graph g = load_graph(oracle_graph);
        vl::Concept target_concept = concept_from(oracle_concept, oracle_k);
        vl::Json out = vl::Json::object();
        out["concept"] = vl::to_string(target_concept.base);
        if (target_concept.exact_size) out["k"] = *target_concept.exact_size;
        out["n"] = g.order();
        vl::Json solutions = vl::Json::array();
        for (const auto& s : vl::solution_set(target_concept, g)) solutions.push_back(vl::set_to_json(s));
        out["solutions"] = std::move(solutions);
        if (target_concept.base == vl::BaseConcept::VertexCover) {
            vl::Json covers = vl::Json::array();
            for (const auto& s : vl::enumerate_minimal_vertex_covers(g)) covers.push_back(vl::set_to_json(s));
            out["minimal_vertex_covers"] = std::move(covers);
            out["cover_number"] = vl::vertex_cover_number(g);
        }
        if (target_concept.base == vl::BaseConcept::DominatingSet) {
            vl::Json family = vl::Json::array();
            for (const auto& s : vl::minimal_closed_neighborhoods(g)) family.push_back(vl::set_to_json(s));
            out["minimal_closed_neighborhoods"] = std::move(family);
        }
        std::cout << out.dump() << "\n";
        return kExitFinished;
    }

    if (bench->parsed()) {
        std::ofstream out(bench_out, std::ios::binary);
        if (!out) throw vl::UsageError("cannot write bench output: " + bench_out);
        vl::run_bench(bench_suite, out);
        return kExitFinished;
    }

    if (serve->parsed()) {
        auto [host, port] = vl::parse_host_port(serve_listen);
        vl::Graph secret = load_graph(serve_graph);
        vl::Concept target_concept = concept_from(serve_concept, serve_k);
        vl::TeacherServer server(host, port, std::move(secret), target_concept,
                                 {vl::policy_from_string(serve_policy), serve_seed});
        std::cerr << "listening on " << host << ":" << server.port() << "\n";
        server.serve();
        return kExitFinished;
    }

    if (learn->parsed()) {
        auto [host, port] = vl::parse_host_port(learn_connect);
        vl::Concept target_concept = concept_from(learn_concept, learn_k);
        vl::LearnerKind learner = pick_learner(target_concept, learn_algo);
        vl::SessionResult result = vl::run_remote_session(host, port, learner, target_concept, learn_n, learn_max_rounds);
        if (!learn_transcript.empty()) write_transcript(learn_transcript, result.transcript);
        print_session_summary(result, target_concept, learner, learn_n);
        return kExitFinished;
    }

    throw vl::UsageError("no subcommand given");
}

}  // namespace
