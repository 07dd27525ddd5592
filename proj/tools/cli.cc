#include "cli.hh"

#include <ecswitch/equivalence.hh>
#include <ecswitch/errors.hh>
#include <ecswitch/graph_io.hh>
#include <ecswitch/group_spec.hh>
#include <ecswitch/homomorphism.hh>
#include <ecswitch/oracle.hh>
#include <ecswitch/property_t.hh>
#include <ecswitch/random_graph.hh>
#include <ecswitch/sequence_io.hh>
#include <ecswitch/switching.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

using namespace ecswitch;

using std::ostream;
using std::string;
using std::vector;

namespace
{
    struct Config
    {
        string graph_path;
        string other_path;
        string sequence_path;
        string group_spec;
        string witness_path;
        string output_path;
        int k = 0;
        int colour = 0;
        std::size_t budget = 0;
        bool oracle = false;
        bool generators_only = false;
        int vertices = 0;
        std::size_t edges = 0;
        int m = 0;
        std::uint64_t seed = 0;
    };

    auto load_graph(const string & path) -> EdgeColouredGraph
    {
        try {
            return parse_ecg(read_text_file(path));
        }
        catch (const ParseError & e) {
            throw ParseError(0, path + ": " + e.what());
        }
    }

    auto load_group(const Config & config, const EdgeColouredGraph & g) -> PermGroup
    {
        auto group = parse_group_spec(config.group_spec);
        if (group.degree() != g.colours())
            throw DegreeMismatch("group " + config.group_spec + " acts on " + std::to_string(group.degree())
                    + " colours but the graph has m = " + std::to_string(g.colours()));
        return group;
    }

    auto options_for(const Config & config) -> DecideOptions
    {
        DecideOptions options;
        if (config.budget > 0)
            options.state_cap = options.exact_cap = config.budget;
        return options;
    }

    auto join(const VertexMap & map) -> string
    {
        string s;
        for (std::size_t i = 0 ; i < map.size() ; ++i)
            s += (i ? " " : "") + std::to_string(map[i]);
        return s;
    }

    void write_file(const string & path, const string & content)
    {
        std::ofstream file(path, std::ios::binary);
        if (! file)
            throw Error("cannot write " + path);
        file << content;
    }

    auto commented(const string & block, const string & prefix) -> string
    {
        std::istringstream lines(block);
        string result, line;
        while (std::getline(lines, line))
            result += prefix + line + "\n";
        return result;
    }

    void print_outcome(ostream & out, const DecisionOutcome & outcome)
    {
        out << "verdict: " << (outcome.verdict ? "yes" : "no") << "\n";
        out << "method: " << to_string(outcome.method) << "\n";
        if (! outcome.notes.empty())
            out << "notes: " << outcome.notes << "\n";
        if (! outcome.verdict)
            return;
        if (outcome.sequence)
            out << "witness steps: " << outcome.sequence->size() << "\n";
        if (outcome.isomorphism)
            out << "isomorphism: " << join(*outcome.isomorphism) << "\n";
        if (outcome.homomorphism)
            out << "map: " << join(outcome.homomorphism->map) << "\n";
        if (outcome.target)
            out << "target:\n" << commented(serialize_ecg(*outcome.target), "  ");
    }

    void write_witness(const string & path, const string & command, const DecisionOutcome & outcome)
    {
        string text = "# ecswitch " + command + " witness\n";
        if (outcome.isomorphism)
            text += serialize_map_comment(*outcome.isomorphism);
        if (outcome.homomorphism)
            text += serialize_map_comment(outcome.homomorphism->map);
        if (outcome.target)
            text += commented(serialize_ecg(*outcome.target), "# target ");
        text += serialize_sequence(outcome.sequence.value_or(SwitchingSequence{}));
        write_file(path, text);
    }

    /// Shared flow of the deciding subcommands: decide, optionally
    /// cross-check against the oracle, replay the witness, report.
    auto decide_and_report(const Config & config, const string & command, ostream & out, ostream & err,
            const std::function<DecisionOutcome (const DecideOptions &)> & decide,
            const std::function<bool (const DecisionOutcome &)> & validate) -> int
    {
        auto options = options_for(config);
        auto outcome = decide(options);
        print_outcome(out, outcome);

        if (config.oracle) {
            auto forced = options;
            forced.force_oracle = true;
            auto reference = decide(forced);
            out << "oracle: " << (reference.verdict ? "yes" : "no") << "\n";
            if (reference.verdict != outcome.verdict) {
                err << "self-check failed: " << to_string(outcome.method) << " says "
                    << (outcome.verdict ? "yes" : "no") << ", oracle says " << (reference.verdict ? "yes" : "no") << "\n";
                return cli::exit_mismatch;
            }
            if (reference.verdict && ! validate(reference)) {
                err << "self-check failed: oracle witness does not replay\n";
                return cli::exit_mismatch;
            }
        }

        if (outcome.verdict && ! validate(outcome)) {
            err << "self-check failed: witness does not replay\n";
            return cli::exit_mismatch;
        }

        if (outcome.verdict && ! config.witness_path.empty())
            write_witness(config.witness_path, command, outcome);
        return outcome.verdict ? cli::exit_yes : cli::exit_no;
    }

    auto cmd_equiv(const Config & config, ostream & out, ostream & err) -> int
    {
        auto g = load_graph(config.graph_path);
        auto h = load_graph(config.other_path);
        auto group = load_group(config, g);
        return decide_and_report(config, "equiv", out, err,
                [&] (const DecideOptions & o) { return switch_equivalent(g, h, group, o); },
                [&] (const DecisionOutcome & r) { return validate_equivalence(g, h, group, r); });
    }

    auto cmd_hom(const Config & config, ostream & out, ostream & err) -> int
    {
        auto g = load_graph(config.graph_path);
        auto h = load_graph(config.other_path);
        auto group = load_group(config, g);
        return decide_and_report(config, "hom", out, err,
                [&] (const DecideOptions & o) { return switchable_hom_exists(g, h, group, o); },
                [&] (const DecisionOutcome & r) { return validate_homomorphism(g, h, group, r); });
    }

    auto cmd_kcol(const Config & config, ostream & out, ostream & err) -> int
    {
        auto g = load_graph(config.graph_path);
        auto group = load_group(config, g);
        return decide_and_report(config, "kcol", out, err,
                [&] (const DecideOptions & o) { return switchable_k_colouring(g, config.k, group, o); },
                [&] (const DecisionOutcome & r) { return validate_colouring(g, config.k, group, r); });
    }

    auto cmd_mono(const Config & config, ostream & out, ostream &) -> int
    {
        auto g = load_graph(config.graph_path);
        auto group = load_group(config, g);
        if (config.colour > g.colours())
            throw InvalidArgument("colour " + std::to_string(config.colour) + " is outside 1.." + std::to_string(g.colours()));

        if (auto failing = property_tj_failure(group, config.colour)) {
            out << "verdict: no\n";
            out << "notes: " << group.name() << " lacks property T_" << config.colour << "\n";
            out << "failing colour: " << *failing << "\n";
            return cli::exit_no;
        }

        auto sequence = monochromatize_sequence(g, config.colour, group);
        out << "verdict: yes\n";
        out << "method: " << to_string(Method::PropertyTFastPath) << "\n";
        out << "witness steps: " << sequence.size() << "\n";
        if (config.witness_path.empty())
            out << "witness:\n" << commented(serialize_sequence(sequence), "  ");
        else
            write_file(config.witness_path, "# ecswitch mono witness, colour " + std::to_string(config.colour) + "\n"
                    + serialize_sequence(sequence));
        return cli::exit_yes;
    }

    auto cmd_apply(const Config & config, ostream & out, ostream &) -> int
    {
        auto g = load_graph(config.graph_path);
        SwitchingSequence sequence;
        try {
            sequence = parse_sequence(read_text_file(config.sequence_path), g.colours());
        }
        catch (const ParseError & e) {
            throw ParseError(0, config.sequence_path + ": " + e.what());
        }
        for (std::size_t i = 0 ; i < sequence.size() ; ++i)
            if (sequence[i].vertex >= g.order())
                throw InvalidArgument(config.sequence_path + ": step " + std::to_string(i + 1) + " switches vertex "
                        + std::to_string(sequence[i].vertex) + " but the graph has " + std::to_string(g.order()) + " vertices");

        auto text = serialize_ecg(apply_sequence(g, sequence));
        if (config.output_path.empty())
            out << text;
        else
            write_file(config.output_path, text);
        return cli::exit_yes;
    }

    auto cmd_gen(const Config & config, ostream & out, ostream &) -> int
    {
        auto text = serialize_ecg(random_graph(config.vertices, config.edges, config.m, config.seed));
        if (config.output_path.empty())
            out << text;
        else
            write_file(config.output_path, text);
        return cli::exit_yes;
    }

    auto cmd_oracle(const Config & config, ostream & out, ostream &) -> int
    {
        auto g = load_graph(config.graph_path);
        auto group = load_group(config, g);
        OracleOptions options;
        if (config.budget > 0)
            options.state_cap = config.budget;
        options.generators_only = config.generators_only;

        auto reached = reachable_signatures(g, group, options);
        std::size_t depth = reached.size() == 0 ? 0 : reached.path_to(reached.size() - 1).size();

        vector<bool> mono(g.colours() + 1, false);
        for (std::size_t s = 0 ; s < reached.size() ; ++s) {
            auto signature = reached.signature(s);
            if (! signature.empty() && std::all_of(signature.begin(), signature.end(),
                        [&] (Colour c) { return c == signature.front(); }))
                mono[signature.front()] = true;
        }

        out << "group: " << group.name() << " (order " << group.order() << ")\n";
        out << "vertices: " << g.order() << "\n";
        out << "edges: " << g.size() << "\n";
        out << "expansion: " << (config.generators_only ? "generators" : "elements") << "\n";
        out << "signatures: " << reached.size() << "\n";
        out << "max distance: " << depth << "\n";
        out << "monochromatic colours:";
        for (Colour c = 1 ; c <= g.colours() ; ++c)
            if (mono[c])
                out << " " << c;
        out << "\n";
        return cli::exit_yes;
    }
}

auto ecswitch::cli::run(const vector<string> & args, ostream & out, ostream & err) -> int
{
    Config config;
    CLI::App app{"Switching equivalence, homomorphism and colouring of edge-coloured graphs", "ecswitch"};
    app.require_subcommand(1);

    auto add_group = [&] (CLI::App * sub) {
        sub->add_option("--group", config.group_spec, "S<m>, A<m>, D<m>, Z<m> or gens<m>:(..);(..)")->required();
    };
    auto add_budget = [&] (CLI::App * sub) {
        sub->add_option("--budget", config.budget, "signature / switch-set budget")->check(CLI::PositiveNumber);
    };
    auto add_decider_flags = [&] (CLI::App * sub) {
        add_group(sub);
        add_budget(sub);
        sub->add_flag("--oracle", config.oracle, "cross-check against the reachability oracle");
        sub->add_option("--witness", config.witness_path, "write the witness sequence and map here");
    };

    auto equiv = app.add_subcommand("equiv", "is G switch equivalent to H?");
    equiv->add_option("G", config.graph_path)->required()->check(CLI::ExistingFile);
    equiv->add_option("H", config.other_path)->required()->check(CLI::ExistingFile);
    add_decider_flags(equiv);

    auto mono = app.add_subcommand("mono", "switch G to a monochromatic graph");
    mono->add_option("G", config.graph_path)->required()->check(CLI::ExistingFile);
    add_group(mono);
    mono->add_option("--colour,-j", config.colour, "target colour")->required()->check(CLI::PositiveNumber);
    mono->add_option("--witness", config.witness_path, "write the sequence here");

    auto apply = app.add_subcommand("apply", "replay a switching sequence on G");
    apply->add_option("G", config.graph_path)->required()->check(CLI::ExistingFile);
    apply->add_option("SEQ", config.sequence_path)->required()->check(CLI::ExistingFile);
    apply->add_option("--output,-o", config.output_path, "write the graph here instead of stdout");

    auto kcol = app.add_subcommand("kcol", "does G have a switchable k-colouring?");
    kcol->add_option("G", config.graph_path)->required()->check(CLI::ExistingFile);
    kcol->add_option("--k", config.k, "number of vertex colours")->required()->check(CLI::PositiveNumber);
    add_decider_flags(kcol);

    auto hom = app.add_subcommand("hom", "does G have a switchable homomorphism to H?");
    hom->add_option("G", config.graph_path)->required()->check(CLI::ExistingFile);
    hom->add_option("H", config.other_path)->required()->check(CLI::ExistingFile);
    add_decider_flags(hom);

    auto gen = app.add_subcommand("gen", "random edge-coloured graph");
    gen->add_option("--vertices,-n", config.vertices)->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--edges,-e", config.edges)->required();
    gen->add_option("--m", config.m, "number of edge colours")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", config.seed)->required();
    gen->add_option("--output,-o", config.output_path, "write the graph here instead of stdout");

    auto oracle = app.add_subcommand("oracle", "statistics of G's switching class");
    oracle->add_option("G", config.graph_path)->required()->check(CLI::ExistingFile);
    add_group(oracle);
    add_budget(oracle);
    oracle->add_flag("--generators-only", config.generators_only, "expand by generators instead of all elements");

    vector<string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e, out, err) == 0 ? exit_yes : exit_usage;
    }

    try {
        if (equiv->parsed())
            return cmd_equiv(config, out, err);
        if (mono->parsed())
            return cmd_mono(config, out, err);
        if (apply->parsed())
            return cmd_apply(config, out, err);
        if (kcol->parsed())
            return cmd_kcol(config, out, err);
        if (hom->parsed())
            return cmd_hom(config, out, err);
        if (gen->parsed())
            return cmd_gen(config, out, err);
        return cmd_oracle(config, out, err);
    }
    catch (const CapExceeded & e) {
        err << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    }
    catch (const Error & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
