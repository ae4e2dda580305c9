#include "dickson/cli.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dickson/catalog_io.hpp"
#include "dickson/dickson_pairs.hpp"
#include "dickson/ff_core.hpp"
#include "dickson/nearfield.hpp"

namespace dickson::cli {

namespace {

using u64 = std::uint64_t;
using ojson = nlohmann::ordered_json;

// decimal-string d * mul + add; keeps i(k) printable beyond 64 bits
std::string decimal_mul_add(const std::string& dec, u64 mul, u64 add) {
    std::string out;
    out.reserve(dec.size() + 8);
    u64 carry = add;
    for (std::size_t i = dec.size(); i-- > 0;) {
        const u64 v = static_cast<u64>(dec[i] - '0') * mul + carry;
        out.push_back(static_cast<char>('0' + v % 10));
        carry = v / 10;
    }
    while (carry) {
        out.push_back(static_cast<char>('0' + carry % 10));
        carry /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out.empty() ? "0" : out;
}

std::string coeff_string(const std::vector<std::uint32_t>& coeffs) {
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += ':';
        s += std::to_string(coeffs[i]);
    }
    return s;
}

const char* mode_name(CheckMode m) {
    return m == CheckMode::exhaustive ? "exhaustive" : "sampled";
}

ojson check_json(const CheckResult& c) {
    ojson j;
    j["name"] = c.name;
    j["mode"] = mode_name(c.mode);
    j["samples"] = c.sample_count;
    j["passed"] = c.passed;
    ojson w = ojson::array();
    for (const FieldElement& e : c.witness) w.push_back(to_string(e));
    j["witness"] = w;
    return j;
}

void render_check(std::ostream& out, const CheckResult& c) {
    out << c.name << ' ' << mode_name(c.mode) << ' ' << c.sample_count << ' '
        << (c.passed ? "PASS" : "FAIL");
    if (!c.witness.empty()) {
        out << " witness";
        for (const FieldElement& e : c.witness) out << ' ' << to_string(e);
    }
    out << '\n';
}

struct Options {
    bool json = false;

    u64 max_q = 0, max_n = 0;

    u64 q = 0, n = 0;
    std::string in_path;
    std::string out_path;
    std::string generator;
    std::int64_t generator_class = -1;

    bool exhaustive = false;
    u64 samples = 1'000'000;
    u64 seed = 0;
    bool samples_given = false;

    std::string op;
};

int cmd_pairs(const Options& o, std::ostream& out) {
    ojson rows = ojson::array();
    for (u64 q = 2; q <= o.max_q; ++q) {
        if (!as_prime_power(q)) continue;
        for (u64 n = 1; n <= o.max_n; ++n) {
            if (!is_dickson_pair(q, n).ok) continue;
            const u64 classes = class_count(make_dickson_pair(q, n));
            if (o.json) {
                ojson row;
                row["q"] = q;
                row["n"] = n;
                row["classes"] = classes;
                rows.push_back(row);
            } else {
                out << q << ' ' << n << ' ' << classes << '\n';
            }
        }
    }
    if (o.json) {
        ojson j;
        j["command"] = "pairs";
        j["max_q"] = o.max_q;
        j["max_n"] = o.max_n;
        j["pairs"] = rows;
        out << j.dump() << '\n';
    }
    return 0;
}

int cmd_construct(const Options& o, std::ostream& out) {
    const DicksonPair pair = make_dickson_pair(o.q, o.n);
    DicksonNearfield nf = [&] {
        if (!o.generator.empty()) return construct(pair, parse_element(o.generator));
        if (o.generator_class >= 0)
            return construct_class(pair, static_cast<unsigned>(o.generator_class));
        return construct(pair);
    }();
    if (!o.out_path.empty()) save_descriptor(nf, o.out_path);
    if (o.json) {
        ojson j;
        j["command"] = "construct";
        j["order"] = nf.order();
        j["descriptor"] = ojson::parse(serialize_descriptor(descriptor_of(nf)));
        if (!o.out_path.empty()) j["out"] = o.out_path;
        out << j.dump() << '\n';
    } else {
        out << "order " << nf.order() << '\n';
        out << "modulus " << coeff_string(nf.field().modulus().coeffs()) << '\n';
        out << "generator " << coeff_string(nf.generator().coeffs) << '\n';
        out << "label " << nf.label() << '\n';
        if (!o.out_path.empty()) out << "wrote " << o.out_path << '\n';
    }
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    std::optional<DicksonNearfield> nf;
    if (!o.in_path.empty()) {
        nf = load_descriptor_file(o.in_path);
    } else {
        nf = construct(make_dickson_pair(o.q, o.n));
    }

    CheckMode mode;
    if (o.exhaustive) {
        if (nf->order() > 625) {
            err << "error: exhaustive verification requires q^n <= 625 (order is " << nf->order()
                << "); use --samples N [--seed S]\n";
            return 2;
        }
        mode = CheckMode::exhaustive;
    } else if (o.samples_given) {
        mode = CheckMode::sampled;
    } else {
        mode = nf->order() <= 625 ? CheckMode::exhaustive : CheckMode::sampled;
    }

    const VerificationReport rep =
        verify_axioms(*nf, mode, SampleSpec{o.samples, o.seed});
    const bool passed = rep.all_passed();

    if (o.json) {
        ojson j;
        j["command"] = "verify";
        j["q"] = nf->pair().q;
        j["n"] = nf->pair().n;
        j["order"] = nf->order();
        j["mode"] = mode_name(mode);
        j["samples"] = mode == CheckMode::sampled ? o.samples : 0;
        j["seed"] = o.seed;
        ojson checks = ojson::array();
        for (const CheckResult& c : rep.checks) checks.push_back(check_json(c));
        j["checks"] = checks;
        j["passed"] = passed;
        out << j.dump() << '\n';
    } else {
        for (const CheckResult& c : rep.checks) render_check(out, c);
        std::size_t failed = 0;
        for (const CheckResult& c : rep.checks)
            if (!c.passed) ++failed;
        if (failed == 0)
            out << "all checks passed\n";
        else
            out << failed << " check(s) failed\n";
    }
    return passed ? 0 : 1;
}

int cmd_witness(const Options& o, std::ostream& out) {
    const DicksonPair pair = make_dickson_pair(o.q, o.n);
    const DicksonNearfield nf = construct(pair);
    const NoncommutativityWitness w = noncommutativity_witness(nf);  // n = 1 -> domain error
    const auto ld = left_distributivity_witness(nf);
    if (!ld)
        throw internal_contradiction_error(
            "no left-distributivity counterexample found for n >= 2");
    if (o.json) {
        ojson j;
        j["command"] = "witness";
        ojson nc;
        nc["a"] = to_string(w.a);
        nc["b"] = to_string(w.b);
        nc["lhs"] = to_string(w.lhs);
        nc["rhs"] = to_string(w.rhs);
        j["noncommutativity"] = nc;
        ojson d;
        d["a"] = to_string((*ld)[0]);
        d["b"] = to_string((*ld)[1]);
        d["c"] = to_string((*ld)[2]);
        j["left_distributivity"] = d;
        out << j.dump() << '\n';
    } else {
        out << "noncommutativity a " << to_string(w.a) << " b " << to_string(w.b) << " lhs "
            << to_string(w.lhs) << " rhs " << to_string(w.rhs) << '\n';
        out << "left_distributivity a " << to_string((*ld)[0]) << " b " << to_string((*ld)[1])
            << " c " << to_string((*ld)[2]) << '\n';
    }
    return 0;
}

int cmd_classes(const Options& o, std::ostream& out) {
    const DicksonPair pair = make_dickson_pair(o.q, o.n);
    const VariantClasses vc = enumerate_variants(pair);
    if (o.json) {
        ojson j;
        j["command"] = "classes";
        j["q"] = pair.q;
        j["n"] = pair.n;
        j["predicted"] = vc.predicted;
        j["found"] = vc.representatives.size();
        j["class_exponents"] = vc.rep_exponents;
        j["variants"] = vc.variant_count;
        j["match"] = vc.matches;
        out << j.dump() << '\n';
    } else {
        out << "predicted " << vc.predicted << '\n';
        for (std::size_t i = 0; i < vc.rep_exponents.size(); ++i)
            out << "class " << i << " generator_exponent " << vc.rep_exponents[i] << '\n';
        out << "found " << vc.representatives.size() << '\n';
        out << (vc.matches ? "MATCH" : "MISMATCH") << '\n';
    }
    return vc.matches ? 0 : 1;
}

int cmd_residues(const Options& o, std::ostream& out) {
    const DicksonPair pair = make_dickson_pair(o.q, o.n);
    const ResidueSystem rs = residue_indices(pair);  // asserts the bijection
    ojson rows = ojson::array();
    std::string ik = "0";
    for (u64 k = 1; k <= pair.n; ++k) {
        ik = decimal_mul_add(ik, pair.q, 1);  // i(k+1) = q*i(k) + 1
        if (o.json) {
            ojson row;
            row["k"] = k;
            row["i"] = ik;
            row["mod"] = rs.residue(static_cast<unsigned>(k));
            rows.push_back(row);
        } else {
            out << "k " << k << " i " << ik << " mod " << rs.residue(static_cast<unsigned>(k))
                << '\n';
        }
    }
    if (o.json) {
        ojson j;
        j["command"] = "residues";
        j["q"] = pair.q;
        j["n"] = pair.n;
        j["entries"] = rows;
        j["bijection"] = true;
        out << j.dump() << '\n';
    } else {
        out << "bijection confirmed\n";
    }
    return 0;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
    const DicksonNearfield nf = load_descriptor_file(o.in_path);
    const CayleyOp op = o.op == "add" ? CayleyOp::add : CayleyOp::mul;
    if (o.json && o.out_path.empty()) {
        err << "error: table --json requires --out (the CSV itself is not JSON)\n";
        return 2;
    }
    if (!o.out_path.empty()) {
        export_cayley_file(nf, op, o.out_path);
        if (o.json) {
            ojson j;
            j["command"] = "table";
            j["op"] = o.op;
            j["order"] = nf.order();
            j["out"] = o.out_path;
            out << j.dump() << '\n';
        } else {
            out << "wrote " << o.out_path << '\n';
        }
    } else {
        export_cayley(nf, op, out);
    }
    return 0;
}

int cmd_n9check(const Options& o, std::ostream& out) {
    const DicksonNearfield nf = construct(make_dickson_pair(3, 2));
    const ExtensionField& F = nf.field();
    u64 compared = 0, mismatches = 0;
    for (u64 i = 0; i < 9; ++i) {
        for (u64 j = 0; j < 9; ++j) {
            const FieldElement x = F.element_from_code(i);
            const FieldElement y = F.element_from_code(j);
            ++compared;
            if (!(nf.nf_mul(x, y) == n9_oracle(F, x, y))) ++mismatches;
        }
    }
    if (o.json) {
        ojson j;
        j["command"] = "n9check";
        j["pairs"] = compared;
        j["mismatches"] = mismatches;
        j["passed"] = mismatches == 0;
        out << j.dump() << '\n';
    } else {
        out << "pairs compared " << compared << '\n';
        out << "mismatches " << mismatches << '\n';
    }
    return mismatches == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite Dickson nearfield construction and verification"};
    app.name("dicksonnf");
    Options o;
    app.add_flag("--json", o.json, "emit a machine-readable JSON report on stdout");
    app.require_subcommand(1);

    auto* pairs = app.add_subcommand("pairs", "list valid Dickson pairs with class counts");
    pairs->add_option("--max-q", o.max_q, "largest q to scan")
        ->required()
        ->check(CLI::PositiveNumber);
    pairs->add_option("--max-n", o.max_n, "largest n to scan")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* construct_cmd = app.add_subcommand("construct", "build DN(q,n) and print/save it");
    construct_cmd->add_option("--q", o.q, "prime power q")->required();
    construct_cmd->add_option("--n", o.n, "subgroup index n")->required();
    auto* gclassopt =
        construct_cmd->add_option("--generator-class", o.generator_class,
                                  "pick the representative generator of class j");
    auto* genopt = construct_cmd->add_option("--generator", o.generator,
                                             "explicit generator as c0:c1:...");
    gclassopt->excludes(genopt);
    genopt->excludes(gclassopt);
    construct_cmd->add_option("--out", o.out_path, "write the descriptor to this path");

    auto* verify = app.add_subcommand("verify", "run the nearfield axiom checks");
    auto* inopt = verify->add_option("--in", o.in_path, "descriptor file to verify");
    auto* qopt = verify->add_option("--q", o.q, "prime power q");
    auto* nopt = verify->add_option("--n", o.n, "subgroup index n");
    qopt->needs(nopt);
    nopt->needs(qopt);
    inopt->excludes(qopt);
    inopt->excludes(nopt);
    auto* exh = verify->add_flag("--exhaustive", o.exhaustive, "sweep all triples (q^n <= 625)");
    auto* samp = verify->add_option("--samples", o.samples, "number of sampled triples");
    verify->add_option("--seed", o.seed, "sampling seed (default 0)");
    exh->excludes(samp);

    auto* witness = app.add_subcommand("witness", "print properness witnesses for DN(q,n)");
    witness->add_option("--q", o.q, "prime power q")->required();
    witness->add_option("--n", o.n, "subgroup index n")->required();

    auto* classes = app.add_subcommand("classes", "enumerate restricted-isomorphism classes");
    classes->add_option("--q", o.q, "prime power q")->required();
    classes->add_option("--n", o.n, "subgroup index n")->required();

    auto* residues = app.add_subcommand("residues", "print the residue system of (q,n)");
    residues->add_option("--q", o.q, "prime power q")->required();
    residues->add_option("--n", o.n, "subgroup index n")->required();

    auto* table = app.add_subcommand("table", "export a Cayley table as CSV");
    table->add_option("--in", o.in_path, "descriptor file")->required();
    table->add_option("--op", o.op, "which table: add or mul")
        ->required()
        ->check(CLI::IsMember({"add", "mul"}));
    table->add_option("--out", o.out_path, "CSV destination (stdout if omitted)");

    auto* n9 = app.add_subcommand("n9check", "compare DN(3,2) against the square-rule product");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (pairs->parsed()) return cmd_pairs(o, out);
        if (construct_cmd->parsed()) return cmd_construct(o, out);
        if (verify->parsed()) {
            if (o.in_path.empty() && (qopt->count() == 0 || nopt->count() == 0)) {
                err << "error: verify needs --in PATH or both --q and --n\n";
                return 2;
            }
            o.samples_given = samp->count() > 0;
            return cmd_verify(o, out, err);
        }
        if (witness->parsed()) return cmd_witness(o, out);
        if (classes->parsed()) return cmd_classes(o, out);
        if (residues->parsed()) return cmd_residues(o, out);
        if (table->parsed()) return cmd_table(o, out, err);
        if (n9->parsed()) return cmd_n9check(o, out);
    } catch (const internal_contradiction_error& e) {
        err << "internal contradiction: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace dickson::cli
