#include "tgi/cli.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tgi/gallery.hpp"
#include "tgi/geninv.hpp"
#include "tgi/imaging.hpp"
#include "tgi/io.hpp"
#include "tgi/parallel.hpp"
#include "tgi/solvers.hpp"
#include "tgi/synth.hpp"

namespace tgi::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct ProductArgs {
    std::string a, b, transform = "dft", out, report;
};

struct InvArgs {
    std::string kind, in, transform = "dft", out, report;
    double rankTol = kDefaultRankTol;
};

struct SolveArgs {
    std::string method, a, b, transform = "dft", out, report;
    double eps = 1e-10;
    long long maxIter = 1000;
    double lambda = 1e-3;
    double rankTol = kDefaultRankTol;
};

struct DeblurArgs {
    std::string in, psf, truth, lambda = "1e-3", transform = "dct", out, metrics;
};

struct BenchArgs {
    std::vector<long long> sizes{30};
    long long k = 1;
    std::vector<std::string> transforms{"dft", "dct", "rand:1"};
    long long reps = 3;
    std::string kind = "drazin";
    std::uint64_t seed = 1;
    std::string out, report;
};

struct InfoArgs {
    std::string in, transform = "dft";
    double rankTol = kDefaultRankTol;
};

double secondsSince(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

json suiteToJson(const ResidualSuite& r)
{
    return json{{"e1", r.e1}, {"e2", r.e2}, {"e3", r.e3}, {"e4", r.e4},
                {"e5", r.e5}, {"e1k", r.e1k}, {"e7", r.e7}};
}

json profileToJson(const IndexProfile& p)
{
    return json{{"ranks", p.ranks},
                {"indices", p.indices},
                {"tubalIndex", p.tubalIndex},
                {"rankTol", p.rankTol}};
}

void maybeWriteReport(const std::string& path, const json& report)
{
    if (!path.empty()) {
        io::writeJson(path, report);
    }
}

int runProduct(const ProductArgs& args, std::ostream& out)
{
    const Tensor3 a = io::readTensor(args.a);
    const Tensor3 b = io::readTensor(args.b);
    const auto kind = TransformKind::parse(args.transform);
    const Transform t = makeTransform(kind, a.depth());
    const auto start = Clock::now();
    const Tensor3 c = mProduct(a, b, t);
    const double elapsed = secondsSince(start);
    io::writeTensor(args.out, c);
    maybeWriteReport(args.report, json{{"command", "product"},
                                       {"transform", kind.toString()},
                                       {"shape", {c.rows(), c.cols(), c.depth()}},
                                       {"time_s", elapsed}});
    out << "wrote " << args.out << " (" << c.rows() << "x" << c.cols() << "x" << c.depth()
        << ")\n";
    return kOk;
}

int runInv(const InvArgs& args, std::ostream& out)
{
    const auto kind = parseInverseKind(args.kind);
    const Tensor3 a = io::readTensor(args.in);
    const auto tk = TransformKind::parse(args.transform);
    const Transform t = makeTransform(tk, a.depth());

    const auto start = Clock::now();
    const Tensor3 x = generalizedInverse(a, kind, t, args.rankTol);
    const double elapsed = secondsSince(start);
    io::writeTensor(args.out, x);

    json report{{"command", "inv"},
                {"kind", toString(kind)},
                {"transform", tk.toString()},
                {"time_s", elapsed},
                {"tubalNorm", tubalNorm(a, t)}};
    Index k = 1;
    if (a.isSquare()) {
        const auto profile = indexProfile(a, t, args.rankTol);
        k = profile.drazinIndex();
        report["profile"] = profileToJson(profile);
    }
    const auto suite = residualSuite(a, x, k, t);
    report["residuals"] = suiteToJson(suite);
    maybeWriteReport(args.report, report);
    out << "wrote " << args.out << " (" << toString(kind) << " inverse)\n";
    return kOk;
}

int runSolve(const SolveArgs& args, std::ostream& out, std::ostream& err)
{
    const Tensor3 a = io::readTensor(args.a);
    const Tensor3 b = io::readTensor(args.b);
    const auto tk = TransformKind::parse(args.transform);
    const Transform t = makeTransform(tk, a.depth());
    json report{{"command", "solve"}, {"method", args.method}, {"transform", tk.toString()}};

    const auto start = Clock::now();
    Tensor3 x(1, 1, 1);
    int code = kOk;
    const std::string& m = args.method;
    if (m == "jacobi" || m == "gauss-seidel") {
        SolverConfig cfg;
        cfg.epsilon = args.eps;
        cfg.maxIter = static_cast<Index>(args.maxIter);
        cfg.method = parseIterativeMethod(m);
        auto result = iterativeSolve(a, b, cfg, t);
        x = std::move(result.x);
        const auto& r = result.report;
        report["perSliceIters"] = r.perSliceIters;
        report["converged"] = r.converged;
        report["spectralRadiusOfT"] = r.spectralRadiusOfT;
        if (!r.allConverged()) {
            err << "tgi solve: " << m << " did not converge within " << args.maxIter
                << " iterations on every slice (rho(T) = " << r.spectralRadiusOfT << ")\n";
            code = kNotConverged;
        }
    } else if (m == "tikhonov") {
        x = tikhonovSolve(a, b, args.lambda, t);
        report["lambda"] = args.lambda;
    } else if (m == "drazin") {
        x = solveDrazin(a, b, t, args.rankTol);
    } else if (m == "core-ep") {
        x = generalSolutionCoreEP(a, b, Tensor3(a.cols(), b.cols(), b.depth()), t, args.rankTol);
    } else if (m == "cmp" || m == "dmp" || m == "mpd") {
        x = solveComposite(a, b, parseInverseKind(m), t, args.rankTol);
    } else {
        throw DimensionError("unknown solve method '" + m + "'");
    }
    report["time_s"] = secondsSince(start);
    report["finalResidual"] = tubalNorm(mProduct(a, x, t) - b, t);
    io::writeTensor(args.out, x);
    maybeWriteReport(args.report, report);
    out << "wrote " << args.out << " (residual " << report["finalResidual"].get<double>()
        << ")\n";
    return code;
}

json psnrJson(double v)
{
    return std::isfinite(v) ? json(v) : json("inf");
}

int runDeblur(const DeblurArgs& args, std::ostream& out)
{
    const Tensor3 blurred = readPng(args.in);
    const BlurModel model = parsePsf(args.psf, blurred.rows());
    const Tensor3 a = buildBlurTensor(model);
    const auto tk = TransformKind::parse(args.transform);
    const Transform t = makeTransform(tk, a.depth());

    json metrics{{"command", "deblur"},
                 {"psf", {{"sigma", model.sigma}, {"b", model.bandwidth}}},
                 {"transform", tk.toString()}};
    std::optional<Tensor3> clean;
    if (!args.truth.empty()) {
        clean = readPng(args.truth);
        if (!clean->sameShape(blurred)) {
            throw DimensionError("--true image shape differs from --in");
        }
        metrics["psnrBlurred"] = psnrJson(psnr(blurred, *clean));
    }

    double lambda = 0.0;
    if (args.lambda == "sweep") {
        if (!clean) {
            throw DimensionError("--lambda sweep needs --true to score each lambda");
        }
        const auto scores = sweepLambda(a, blurred, *clean, logGrid(1e-6, 1.0, 13), t);
        json sweep = json::array();
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& s : scores) {
            sweep.push_back({{"lambda", s.lambda}, {"psnr", psnrJson(s.psnr)}});
            if (s.psnr > best) {
                best = s.psnr;
                lambda = s.lambda;
            }
        }
        metrics["sweep"] = sweep;
    } else {
        std::size_t used = 0;
        try {
            lambda = std::stod(args.lambda, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != args.lambda.size() || !(lambda > 0.0)) {
            throw DimensionError("--lambda must be a positive number or 'sweep'");
        }
    }

    const Tensor3 restored = deblur(a, blurred, lambda, t);
    writePng(args.out, restored);
    metrics["lambda"] = lambda;
    if (clean) {
        metrics["psnrRestored"] = psnrJson(psnr(restored, *clean));
    }
    maybeWriteReport(args.metrics, metrics);
    out << "wrote " << args.out << " (lambda " << lambda << ")\n";
    return kOk;
}

int runBench(const BenchArgs& args, std::ostream& out)
{
    if (args.kind != "drazin" && args.kind != "core-ep") {
        throw DimensionError("--kind must be drazin or core-ep");
    }
    if (args.k < 1 || args.k > 2) {
        throw DimensionError("--k must be 1 or 2");
    }
    if (args.reps < 1) {
        throw DimensionError("--reps must be at least 1");
    }
    const bool drazin = args.kind == "drazin";

    std::ostringstream csv;
    csv << std::setprecision(6);
    csv << (drazin ? "size,k,transform,mean_time_s,e2,e5,e1k\n"
                   : "size,k,transform,mean_time_s,e3,e7,e1k\n");
    json rows = json::array();
    for (const long long size : args.sizes) {
        if (size < 2) {
            throw DimensionError("bench sizes must be at least 2");
        }
        const auto n = static_cast<Index>(size);
        for (const auto& spec : args.transforms) {
            const auto tk = TransformKind::parse(spec);
            const Transform t = makeTransform(tk, n);
            const Tensor3 a =
                synth::randomIndexTensor(n, n, static_cast<Index>(args.k), t, args.seed + static_cast<std::uint64_t>(size));
            const auto compute = [&] {
                return drazin ? drazinInverse(a, t).inverse : coreEPInverse(a, t);
            };
            Tensor3 x = compute(); // warm-up, not timed
            double total = 0.0;
            for (long long r = 0; r < args.reps; ++r) {
                const auto start = Clock::now();
                x = compute();
                total += secondsSince(start);
            }
            const double mean = total / static_cast<double>(args.reps);
            const Index k = indexProfile(a, t).drazinIndex();
            const auto s = residualSuite(a, x, k, t);
            const double r1 = drazin ? s.e2 : s.e3;
            const double r2 = drazin ? s.e5 : s.e7;
            csv << size << ',' << k << ',' << tk.toString() << ',' << mean << ',' << r1 << ','
                << r2 << ',' << s.e1k << '\n';
            rows.push_back({{"size", size},
                            {"k", k},
                            {"transform", tk.toString()},
                            {"mean_time_s", mean},
                            {"residuals", suiteToJson(s)}});
        }
    }
    if (args.out.empty()) {
        out << csv.str();
    } else {
        std::ofstream file(args.out);
        if (!(file << csv.str())) {
            throw IoError("cannot write " + args.out);
        }
    }
    maybeWriteReport(args.report, json{{"command", "bench"},
                                       {"kind", args.kind},
                                       {"reps", args.reps},
                                       {"seed", args.seed},
                                       {"rows", rows}});
    return kOk;
}

int runInfo(const InfoArgs& args, std::ostream& out)
{
    const Tensor3 a = io::readTensor(args.in);
    const auto tk = TransformKind::parse(args.transform);
    const Transform t = makeTransform(tk, a.depth());
    json info{{"m", a.rows()},
              {"n", a.cols()},
              {"p", a.depth()},
              {"transform", tk.toString()},
              {"multirank", multirank(a, t, args.rankTol)},
              {"tubalNorm", tubalNorm(a, t)}};
    if (a.isSquare()) {
        const auto profile = indexProfile(a, t, args.rankTol);
        info["indices"] = profile.indices;
        info["tubalIndex"] = profile.tubalIndex;
        info["spectralRadius"] = spectralRadius(a, t);
        info["diagDominant"] = isDiagDominant(a, t);
    }
    out << info.dump(2) << '\n';
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Tensor generalized inverses and multilinear solvers under the M-product", "tgi"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "worker thread cap (0 = hardware concurrency)");

    const std::string transformHelp = "dft | dct | identity | rand:<seed> | file:<path>";

    ProductArgs pa;
    auto* product = app.add_subcommand("product", "C = A *_M B");
    product->add_option("--A", pa.a, "left operand (T3J)")->required();
    product->add_option("--B", pa.b, "right operand (T3J)")->required();
    product->add_option("--transform", pa.transform, transformHelp);
    product->add_option("--out", pa.out, "output tensor (T3J)")->required();
    product->add_option("--report", pa.report, "JSON report");

    InvArgs ia;
    auto* inv = app.add_subcommand("inv", "generalized inverse of A");
    inv->add_option("--kind", ia.kind, "mp | drazin | core-ep | dmp | mpd | cmp")->required();
    inv->add_option("--in", ia.in, "input tensor (T3J)")->required();
    inv->add_option("--transform", ia.transform, transformHelp);
    inv->add_option("--out", ia.out, "output tensor (T3J)")->required();
    inv->add_option("--report", ia.report, "residual report (JSON)");
    inv->add_option("--rank-tol", ia.rankTol, "relative singular value cutoff");

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "solve A *_M X = B");
    solve->add_option("--method", sa.method,
                      "jacobi | gauss-seidel | tikhonov | drazin | core-ep | cmp | dmp | mpd")
        ->required();
    solve->add_option("--A", sa.a, "coefficient tensor (T3J)")->required();
    solve->add_option("--B", sa.b, "right-hand side (T3J)")->required();
    solve->add_option("--transform", sa.transform, transformHelp);
    solve->add_option("--eps", sa.eps, "iterate-distance stopping tolerance");
    solve->add_option("--max-iter", sa.maxIter, "iteration cap");
    solve->add_option("--lambda", sa.lambda, "Tikhonov parameter");
    solve->add_option("--rank-tol", sa.rankTol, "relative singular value cutoff");
    solve->add_option("--out", sa.out, "solution tensor (T3J)")->required();
    solve->add_option("--report", sa.report, "solver report (JSON)");

    DeblurArgs da;
    auto* deblurCmd = app.add_subcommand("deblur", "Tikhonov deblurring of a square RGB PNG");
    deblurCmd->add_option("--in", da.in, "blurred image (PNG)")->required();
    deblurCmd->add_option("--psf", da.psf, "\"sigma=<s>,b=<bandwidth>\"")->required();
    deblurCmd->add_option("--true", da.truth, "clean image for PSNR (PNG)");
    deblurCmd->add_option("--lambda", da.lambda, "<value> | sweep");
    deblurCmd->add_option("--transform", da.transform, transformHelp);
    deblurCmd->add_option("--out", da.out, "restored image (PNG)")->required();
    deblurCmd->add_option("--metrics", da.metrics, "metrics (JSON)");

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "time Drazin or core-EP inverses of random tensors");
    bench->add_option("--sizes", ba.sizes, "tensor sizes n (n x n x n)")->delimiter(',');
    bench->add_option("--k", ba.k, "tubal index of the random tensors (1 or 2)");
    bench->add_option("--transforms", ba.transforms, "transform specs")->delimiter(',');
    bench->add_option("--reps", ba.reps, "timed repetitions after one warm-up run");
    bench->add_option("--kind", ba.kind, "drazin | core-ep");
    bench->add_option("--seed", ba.seed, "base seed for the random tensors");
    bench->add_option("--out", ba.out, "CSV file (default stdout)");
    bench->add_option("--report", ba.report, "JSON report");

    InfoArgs fa;
    auto* infoCmd = app.add_subcommand("info", "structural quantities of a tensor as JSON");
    infoCmd->add_option("--in", fa.in, "input tensor (T3J)")->required();
    infoCmd->add_option("--transform", fa.transform, transformHelp);
    infoCmd->add_option("--rank-tol", fa.rankTol, "relative singular value cutoff");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "tgi: " << e.what() << '\n';
        return kUsage;
    }

    parallel::setMaxThreads(threads);
    const std::string name = app.get_subcommands().front()->get_name();
    try {
        if (*product) {
            return runProduct(pa, out);
        }
        if (*inv) {
            return runInv(ia, out);
        }
        if (*solve) {
            return runSolve(sa, out, err);
        }
        if (*deblurCmd) {
            return runDeblur(da, out);
        }
        if (*bench) {
            return runBench(ba, out);
        }
        return runInfo(fa, out);
    } catch (const DimensionError& e) {
        err << "tgi " << name << ": " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        err << "tgi " << name << ": " << e.what() << '\n';
        return kIo;
    } catch (const Error& e) {
        err << "tgi " << name << ": " << e.what() << '\n';
        return kNumerical;
    } catch (const std::bad_alloc&) {
        err << "tgi " << name << ": out of memory\n";
        return kNumerical;
    }
}

} // namespace tgi::cli
