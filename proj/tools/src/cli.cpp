#include "nullcs_cli/cli.hpp"

#include "nullcs/codebook.hpp"
#include "nullcs/construct.hpp"
#include "nullcs/errors.hpp"
#include "nullcs/fileio.hpp"
#include "nullcs/papr.hpp"
#include "nullcs/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace nullcs::cli {

namespace {

struct ParamFlags {
    int q = 0;
    int m = 0;
    int v = 0;
    std::vector<int> pi;
    std::vector<int> lambda;
    std::vector<int> mu;
    int mu0 = 0;
    std::string params_file;
    std::size_t b = 0;
    std::string order = "g-first";
};

struct Options {
    ParamFlags p;
    std::string in;
    std::string out;
    std::vector<std::size_t> plan;
    std::size_t n = 0;
    std::optional<double> tol;
    int oversample = 8;
    std::optional<int> papr_v;
    std::string variant;
    bool dmin = false;
    std::uint64_t cap = 1'000'000;
    int table = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SequenceDocument read_document(const std::string& path) {
    try {
        return parse_document(read_file(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void add_param_flags(CLI::App* cmd, ParamFlags& p) {
    cmd->add_option("--q", p.q, "alphabet size (even)");
    cmd->add_option("--m", p.m, "number of variables");
    cmd->add_option("--v", p.v, "truncation parameter, length 2^(m-1) + 2^v");
    cmd->add_option("--pi", p.pi, "permutation images pi(1),...,pi(m-1)")->delimiter(',');
    cmd->add_option("--lambda", p.lambda, "lambda_1,...,lambda_v (default zero)")->delimiter(',');
    cmd->add_option("--mu", p.mu, "mu_1,...,mu_m (default zero)")->delimiter(',');
    cmd->add_option("--mu0", p.mu0, "constant term (default 0)");
    cmd->add_option("--params", p.params_file, "key=value parameter file; explicit flags override it");
}

Theorem2Params resolve_params(const CLI::App* cmd, const ParamFlags& f) {
    Theorem2Params p;
    if (!f.params_file.empty()) {
        try {
            p = parse_params(read_file(f.params_file));
        } catch (const ParseError& e) {
            throw InputError(f.params_file + ": " + e.what());
        }
    } else {
        for (const char* name : {"--q", "--m", "--v"})
            if (cmd->count(name) == 0) throw InputError(std::string(name) + " is required without --params");
    }
    // New dimensions invalidate the file's permutation and coefficient lists.
    if (cmd->count("--q") || cmd->count("--m") || cmd->count("--v")) {
        p = Theorem2Params::zeros(cmd->count("--q") ? f.q : p.q, cmd->count("--m") ? f.m : p.m,
                                  cmd->count("--v") ? f.v : p.v);
    }
    if (cmd->count("--pi")) p.pi = ConstrainedPermutation(p.m, p.v, f.pi);
    if (cmd->count("--lambda")) p.lambda = f.lambda;
    if (cmd->count("--mu")) p.mu = f.mu;
    if (cmd->count("--mu0")) p.mu0 = f.mu0;
    p.validate();
    return p;
}

HalfOrder parse_order(const std::string& text) {
    if (text == "g-first") return HalfOrder::g_first;
    if (text == "f-first") return HalfOrder::f_first;
    throw InputError("--order must be g-first or f-first");
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) throw InputError("cannot write '" + path + "'");
}

SequenceDocument simplify(MocsFamily family) {
    if (family.size() == 1) return family[0];
    return family;
}

int cmd_verify(bool mocs, const Options& o, std::ostream& out) {
    const auto doc = read_document(o.in);
    const auto family = as_family(doc);
    if (mocs) {
        const auto report = is_mocs(family, o.tol);
        out << (report ? "PASS" : "FAIL") << " mocs M=" << family.size() << " N=" << family.set_size()
            << " L=" << family.length() << " q=" << family.q();
        if (!report) out << ": " << report.describe();
        out << "\n";
        return report ? kOk : kPropertyFailed;
    }
    bool all = true;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& set = family[i];
        const auto report = is_complementary_set(set, o.tol);
        out << (report ? "PASS" : "FAIL") << " cs";
        if (family.size() > 1) out << " set=" << i + 1;
        out << " N=" << set.size() << " L=" << set.length() << " q=" << set.q();
        if (!report) out << ": " << report.describe();
        out << "\n";
        all = all && report.ok;
    }
    return all ? kOk : kPropertyFailed;
}

int cmd_papr(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.oversample < 1) throw InputError("--oversample must be at least 1");
    const auto family = as_family(read_document(o.in));
    const PaprConfig cfg{o.oversample};
    CsvWriter csv;
    csv.row({"length", "b", "v", "set_papr", "bound", "margin"});
    for (const auto& set : family) {
        const auto report = check_lemma1_bound(set, cfg);
        const auto nulls = set.length() - set[0].energy();
        if (!report.equal_energy) err << "note: members carry different numbers of NULLs; bound does not apply\n";
        csv.row({std::to_string(set.length()), std::to_string(nulls), o.papr_v ? std::to_string(*o.papr_v) : "",
                 format_fixed4(report.set_papr), format_fixed4(report.bound),
                 format_fixed4(report.bound - report.set_papr)});
    }
    out << csv.str();
    return kOk;
}

int cmd_codebook(const CLI::App* cmd, const Options& o, std::ostream& out, std::ostream& err) {
    for (const char* name : {"--q", "--m", "--v"})
        if (cmd->count(name) == 0) throw InputError(std::string(name) + " is required");
    CodebookSpec spec{o.p.q, o.p.m, o.p.v, o.p.b, parse_variant(o.variant), o.p.pi};
    spec.validate();
    const auto rate = code_rate(spec);
    out << "size=" << size_formula(spec) << " rate=" << format_fixed4(rate.numerator, rate.denominator);
    if (o.dmin) {
        const auto book = enumerate(spec, o.cap);
        if (book.size() != book.raw_count()) {
            out << " distinct=" << book.size();
            const auto& c = *book.first_collision();
            err << "note: " << book.raw_count() - book.size() << " duplicate codewords, first at raw indices "
                << c.first << " and " << c.second << "\n";
        }
        out << " dmin=" << (book.size() < 2 ? 0 : min_hamming_distance(book));
    }
    out << "\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Complementary sequence sets with spectral nulls", "nullcs"};
    app.require_subcommand(1);
    Options o;

    auto* construct = app.add_subcommand("construct", "build a sequence set and emit it as a document");
    construct->require_subcommand(1);
    auto* t2 = construct->add_subcommand("theorem2", "size-4 CS of length 2^(m-1) + 2^v");
    auto* t3 = construct->add_subcommand("theorem3", "the (2, 4, 2^(m-1) + 2^v) MOCS {G, F}");
    auto* concat = construct->add_subcommand("concat", "size-4 CS (G | b NULLs | F) of length 2^m + 2^(v+1) + b");
    for (auto* cmd : {t2, t3, concat}) {
        add_param_flags(cmd, o.p);
        cmd->add_option("--out", o.out, "output file (default stdout)");
    }
    concat->add_option("--b", o.p.b, "number of NULLs between the halves");
    concat->add_option("--order", o.p.order, "g-first (default) or f-first");
    auto* iter = construct->add_subcommand("iterate", "zero-insertion iterations over an MOCS document");
    iter->add_option("--in", o.in, "input MOCS document")->required();
    iter->add_option("--plan", o.plan, "NULL counts b_1,...,b_{k-1}")->delimiter(',')->required();
    iter->add_option("--out", o.out, "output file (default stdout)");
    auto* seed = construct->add_subcommand(
        "seed",
        "binary (N, N, N) complete complementary code from Kronecker powers of a Golay kernel; "
        "non-paper plumbing that only supplies MOCS seeds for 'iterate'");
    seed->add_option("--n", o.n, "N in {2, 4, 8, 16}")->required();
    seed->add_option("--out", o.out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "check correlation properties; exit 1 when they fail");
    verify->require_subcommand(1);
    auto* vcs = verify->add_subcommand("cs", "every set in the document is complementary");
    auto* vmocs = verify->add_subcommand("mocs", "the document is a mutually orthogonal family of CSs");
    for (auto* cmd : {vcs, vmocs}) {
        cmd->add_option("--in", o.in, "input document")->required();
        cmd->add_option("--tol", o.tol, "zero tolerance for q outside {1, 2, 4} (default 1e-9 L)");
    }

    auto* papr_cmd = app.add_subcommand("papr", "PAPR of each set in a document, as CSV");
    papr_cmd->add_option("--in", o.in, "input document")->required();
    papr_cmd->add_option("--oversample", o.oversample, "oversampling ratio J (default 8)");
    papr_cmd->add_option("--v", o.papr_v, "value for the v column");

    auto* codebook = app.add_subcommand("codebook", "codebook size, code rate and optionally d_min");
    codebook->add_option("--variant", o.variant, "c1, c2, c3 or c21")->required();
    codebook->add_option("--q", o.p.q, "alphabet size (even)");
    codebook->add_option("--m", o.p.m, "number of variables");
    codebook->add_option("--v", o.p.v, "truncation parameter");
    codebook->add_option("--b", o.p.b, "number of NULLs (0 for c1)");
    codebook->add_option("--pi", o.p.pi, "fixed permutation for c21 (default identity)")->delimiter(',');
    codebook->add_flag("--dmin", o.dmin, "enumerate and compute the minimum Hamming distance");
    codebook->add_option("--cap", o.cap, "largest codebook to enumerate (default 1000000)");

    auto* report = app.add_subcommand("report", "regenerate a published table as CSV");
    report->add_option("--table", o.table, "1, 2, 3, 4 or 6")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
        out << target->help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (construct->parsed()) {
            if (t2->parsed()) {
                write_output(emit(chen_cs(resolve_params(t2, o.p))), o.out, out);
            } else if (t3->parsed()) {
                write_output(emit(mocs_pair(resolve_params(t3, o.p))), o.out, out);
            } else if (concat->parsed()) {
                const auto p = resolve_params(concat, o.p);
                write_output(emit(concat_cs(p, o.p.b, parse_order(o.p.order))), o.out, out);
            } else if (iter->parsed()) {
                const auto family = as_family(read_document(o.in));
                write_output(emit(simplify(iterate(family, o.plan))), o.out, out);
            } else {
                write_output(emit(seed_ccc(o.n)), o.out, out);
            }
            return kOk;
        }
        if (verify->parsed()) return cmd_verify(vmocs->parsed(), o, out);
        if (papr_cmd->parsed()) return cmd_papr(o, out, err);
        if (codebook->parsed()) return cmd_codebook(codebook, o, out, err);
        out << report_table(o.table);
        return kOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace nullcs::cli
