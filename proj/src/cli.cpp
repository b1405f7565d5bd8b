#include "curvcert/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "curvcert/certify.hpp"
#include "curvcert/errors.hpp"
#include "curvcert/staircase.hpp"
#include "curvcert/testcurve.hpp"
#include "curvcert/textension.hpp"

namespace curvcert::cli {

namespace {

std::string join_ints(const std::vector<int>& v, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0)
            out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string beta_map(const TExtension& ext)
{
    std::string out;
    for (std::size_t s = 0; s < ext.beta.size(); ++s) {
        if (s > 0)
            out += ", ";
        out += std::to_string(s + 1) + "->" + std::to_string(ext.beta[s]);
    }
    return out;
}

void print_extension(const TExtension& ext, std::ostream& out)
{
    out << "essential axes: " << (ext.essential_axes.empty() ? "none" : "") ;
    for (std::size_t i = 0; i < ext.essential_axes.size(); ++i)
        out << (i > 0 ? ", " : "") << 'x' << ext.essential_axes[i] + 1;
    out << '\n';
    out << "cuboid: " << (ext.cuboid_dims.empty() ? "point" : join_ints(ext.cuboid_dims, "x")) << '\n';
    out << "beta: " << beta_map(ext) << '\n';
    out << "N=" << ext.N << " K=" << ext.K << '\n';
    out << "pi_plus: " << to_string(ext.pi_plus) << '\n';
    out << "mon_plus: " << format_monomials(ext.mon_plus) << '\n';
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_certify(const std::string& ideal, int n, const std::string& out_path, std::ostream& out)
{
    const CurvilinearCertificate cert = certify_monomial_ideal(parse_monomials(ideal, n), n);
    out << "ideal: " << format_monomials(cert.generators) << '\n';
    out << "colength: " << cert.staircase.colength() << '\n';
    out << "rl: " << to_string(cert.rl) << '\n';
    print_extension(cert.extension, out);
    out << "weights:";
    for (const auto& q : cert.weights.values)
        out << ' ' << q.str();
    out << '\n';
    for (const auto& c : cert.checks)
        out << "check " << c.name << ": " << (c.passed ? "pass" : "FAIL") << (c.detail.empty() ? "" : " (" + c.detail + ")")
            << '\n';
    out << "conclusion: " << (cert.conclusion ? "member of the curvilinear component" : "not certified") << '\n';
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f)
            throw InvalidInput("cannot write '" + out_path + "'");
        f << certificate_to_json(cert);
        out << "certificate written to " << out_path << '\n';
    }
    return cert.conclusion ? kSuccess : kRejected;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err)
{
    std::string text;
    try {
        text = read_file(path);
    } catch (const InvalidInput& e) {
        err << "reject: " << e.what() << '\n';
        return kRejected;
    }
    CurvilinearCertificate cert;
    try {
        cert = certificate_from_json(text);
    } catch (const ParseError& e) {
        err << "reject: parse failure: " << e.what() << '\n';
        return kRejected;
    }
    const Verdict v = verify_certificate(cert);
    if (v.accepted) {
        out << "accept\n";
        return kSuccess;
    }
    for (const auto& r : v.reasons)
        err << "reject: " << r << '\n';
    return kRejected;
}

struct EnumerationResult {
    std::string line;
    bool ok = true;
};

EnumerationResult certify_one(const Staircase& y)
{
    const std::vector<Exponent> gens = minimal_generators(y);
    EnumerationResult r;
    try {
        const CurvilinearCertificate cert = certify_monomial_ideal(gens, y.dim());
        const Verdict v = verify_certificate(cert);
        r.ok = cert.conclusion && v.accepted;
        r.line = (r.ok ? "ok " : "FAIL ") + format_monomials(gens) + " N=" + std::to_string(cert.extension.N);
        if (!v.accepted)
            r.line += " reason: " + v.reasons.front();
    } catch (const std::exception& e) {
        r.ok = false;
        r.line = "FAIL " + format_monomials(gens) + " error: " + e.what();
    }
    return r;
}

int cmd_enumerate(int n, int k, bool certify_all, int jobs, std::ostream& out)
{
    const std::vector<Staircase> all = enumerate_staircases(n, k);
    if (!certify_all) {
        for (const auto& y : all)
            out << format_monomials(minimal_generators(y)) << '\n';
        out << "total " << all.size() << '\n';
        return kSuccess;
    }
    std::vector<EnumerationResult> results(all.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < all.size(); i = next++)
            results[i] = certify_one(all[i]);
    };
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(all.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    std::size_t passed = 0;
    for (const auto& r : results) {
        out << r.line << '\n';
        passed += r.ok ? 1 : 0;
    }
    out << "certified " << passed << " of " << all.size() << '\n';
    return passed == all.size() ? kSuccess : kRejected;
}

int cmd_expand(int k, const std::string& shape, std::ostream& out)
{
    VSpec spec;
    if (shape == "diagonal")
        spec = VSpec::diagonal();
    else if (shape == "triangular")
        spec = VSpec::triangular();
    else
        throw InvalidInput("unknown shape '" + shape + "'");
    out << format_wedge_polynomial(phi_expand(k, spec));
    return kSuccess;
}

int cmd_extend(const std::string& ideal, int n, std::ostream& out)
{
    const Staircase y = from_generators(parse_monomials(ideal, n), n);
    print_extension(t_extend(y), out);
    return kSuccess;
}

int cmd_limits(int k, const std::string& alpha_text, std::ostream& out)
{
    Vector alpha;
    std::stringstream ss(alpha_text);
    std::string item;
    while (std::getline(ss, item, ','))
        alpha.push_back(parse_rational(item));
    const TorusLimit lim = torus_limit(k, alpha);
    if (lim.limit)
        out << "limit " << to_string(*lim.limit) << " exponent " << lim.max_exponent.str() << '\n';
    else
        out << "non-unique maximum: " << lim.maximizers << " sequences tie at exponent " << lim.max_exponent.str()
            << '\n';
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Certificates for curvilinearity of monomial ideals"};
    app.require_subcommand(1);

    std::string ideal, out_path, path, shape, alpha;
    int n = 0, k = 0, jobs = 1;
    bool certify_all = false;

    auto* certify = app.add_subcommand("certify", "Certify one monomial ideal");
    certify->add_option("--ideal", ideal, "Generators, e.g. \"x1^2, x1*x2, x2^2\"")->required();
    certify->add_option("--n", n, "Number of variables")->required();
    certify->add_option("--out", out_path, "Certificate output path");

    auto* verify = app.add_subcommand("verify", "Verify a certificate file");
    verify->add_option("path", path, "Certificate path")->required();

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate staircases of colength k in n variables");
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--k", k)->required();
    enumerate->add_flag("--certify-all", certify_all, "Certify and verify every staircase");
    enumerate->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* expand = app.add_subcommand("expand", "Symbolic wedge expansion of the test-curve map");
    expand->add_option("--k", k)->required();
    expand->add_option("--shape", shape)->required()->check(CLI::IsMember({"diagonal", "triangular"}));

    auto* extend = app.add_subcommand("extend", "Print the T-extension of a monomial ideal");
    extend->add_option("--ideal", ideal)->required();
    extend->add_option("--n", n)->required();

    auto* limits = app.add_subcommand("limits", "Torus limit for a weight vector");
    limits->add_option("--k", k)->required();
    limits->add_option("--alpha", alpha, "Comma-separated rationals")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    }

    try {
        if (certify->parsed())
            return cmd_certify(ideal, n, out_path, out);
        if (verify->parsed())
            return cmd_verify(path, out, err);
        if (enumerate->parsed())
            return cmd_enumerate(n, k, certify_all, jobs, out);
        if (expand->parsed())
            return cmd_expand(k, shape, out);
        if (extend->parsed())
            return cmd_extend(ideal, n, out);
        if (limits->parsed())
            return cmd_limits(k, alpha, out);
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return kInvalid;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace curvcert::cli
