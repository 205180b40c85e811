#include "summand/report.hpp"

#include <algorithm>
#include <sstream>

#include "summand/errors.hpp"
#include "summand/rng.hpp"

namespace summand {

namespace {

OrderedJson report_head(const char* command, const Instance& inst,
                        const ReportOptions& opt) {
    OrderedJson j;
    j["schema_version"] = kReportSchemaVersion;
    j["command"] = command;
    j["seed"] = opt.seed;
    j["field"] = {{"p", inst.field.p()}};
    j["algebra_dim"] = inst.algebra->dim();
    return j;
}

OrderedJson certificate_json(const LocalCertificate& cert) {
    OrderedJson c;
    c["local"] = cert.local;
    c["kind"] = cert.kind;
    if (cert.idempotent) c["idempotent"] = *cert.idempotent;
    if (cert.noncommuting) {
        c["noncommuting"] = {{"x", cert.noncommuting->first},
                             {"y", cert.noncommuting->second}};
    }
    return c;
}

}  // namespace

OrderedJson matrix_json(const Matrix& m) {
    OrderedJson rows = OrderedJson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        OrderedJson row = OrderedJson::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

OrderedJson decompose_report(const Instance& inst,
                             const std::string& module_name,
                             const Decomposition& dec,
                             const ReportOptions& opt) {
    OrderedJson j = report_head("decompose", inst, opt);
    j["module"] = module_name;
    j["module_dim"] = dec.parent.dim();
    j["summand_classes"] = OrderedJson::array();
    for (const auto& cls : dec.classes) {
        OrderedJson c;
        c["dim"] = cls.representative.dim();
        c["multiplicity"] = cls.multiplicity;
        c["certificate"] = certificate_json(cls.certificate);
        if (opt.witnesses) {
            OrderedJson ws = OrderedJson::array();
            for (const auto& [iota, pi] : cls.witnesses)
                ws.push_back({{"iota", matrix_json(iota)},
                              {"pi", matrix_json(pi)}});
            c["witnesses"] = std::move(ws);
            OrderedJson action = OrderedJson::array();
            for (const auto& a : cls.representative.actions())
                action.push_back(matrix_json(a));
            c["action"] = std::move(action);
        }
        j["summand_classes"].push_back(std::move(c));
    }
    j["total_summands"] = dec.total_summands();
    return j;
}

OrderedJson cover_report(const Instance& inst, const std::string& module_name,
                         const CoverResult& cover, const ReportOptions& opt) {
    OrderedJson j = report_head("projcover", inst, opt);
    j["module"] = module_name;
    j["module_dim"] = cover.target.dim();
    j["cover_dim"] = cover.cover.dim();
    j["kernel_dim"] = cover.kernel.rows();
    j["essential"] = cover.essential;
    OrderedJson usage = OrderedJson::array();
    for (const auto& [label, count] : cover.pim_usage)
        usage.push_back({{"pim", label}, {"count", count}});
    j["cover_composition"] = std::move(usage);
    if (opt.witnesses) {
        j["epi"] = matrix_json(cover.epi);
        j["kernel_basis"] = matrix_json(cover.kernel);
    }
    return j;
}

OrderedJson hom_report(const Instance& inst, const std::string& source,
                       const std::string& target, const HomSpace& hom,
                       const ReportOptions& opt) {
    OrderedJson j = report_head("hom", inst, opt);
    j["source"] = source;
    j["target"] = target;
    j["dim"] = hom.dim();
    if (opt.witnesses) {
        OrderedJson basis = OrderedJson::array();
        for (const auto& t : hom.basis()) basis.push_back(matrix_json(t));
        j["basis"] = std::move(basis);
    }
    return j;
}

OrderedJson end_report(const Instance& inst, const std::string& module_name,
                       const EndAlgebra& end, const ReportOptions& opt) {
    OrderedJson j = report_head("end", inst, opt);
    j["module"] = module_name;
    j["dim"] = end.dim();
    j["commutative"] = end.dim() == 0 || end.algebra->is_commutative();
    if (opt.witnesses) {
        OrderedJson basis = OrderedJson::array();
        for (const auto& t : end.basis) basis.push_back(matrix_json(t));
        j["basis"] = std::move(basis);
    }
    return j;
}

OrderedJson radhom_report(const Instance& inst, const std::string& source,
                          const std::string& target, const RadHomSpace& rad,
                          const ReportOptions& opt) {
    OrderedJson j = report_head("radhom", inst, opt);
    j["source"] = source;
    j["target"] = target;
    j["hom_dim"] = rad.hom().dim();
    j["rad_dim"] = rad.dim();
    if (opt.witnesses) {
        OrderedJson basis = OrderedJson::array();
        for (const auto& t : rad.basis()) basis.push_back(matrix_json(t));
        j["basis"] = std::move(basis);
    }
    return j;
}

OrderedJson isiso_report(const Instance& inst, const std::string& left,
                         const std::string& right,
                         const std::optional<Matrix>& witness,
                         const ReportOptions& opt) {
    OrderedJson j = report_head("is-iso", inst, opt);
    j["left"] = left;
    j["right"] = right;
    j["isomorphic"] = witness.has_value();
    if (opt.witnesses && witness) j["witness"] = matrix_json(*witness);
    return j;
}

namespace {

struct VerifyContext {
    const Instance& inst;
    std::uint64_t seed;
    OrderedJson results = OrderedJson::array();
    bool all_pass = true;

    void add(const std::string& suite, const std::string& property, bool ok,
             const std::string& detail) {
        OrderedJson r;
        r["suite"] = suite;
        r["property"] = property;
        r["status"] = ok ? "pass" : "fail";
        r["detail"] = detail;
        results.push_back(std::move(r));
        all_pass = all_pass && ok;
    }

    void info(const std::string& suite, const std::string& property,
              const std::string& detail) {
        OrderedJson r;
        r["suite"] = suite;
        r["property"] = property;
        r["status"] = "info";
        r["detail"] = detail;
        results.push_back(std::move(r));
    }
};

void verify_radical(VerifyContext& ctx) {
    const Algebra& a = *ctx.inst.algebra;
    const Fp fp = a.field();
    RadicalIdeal rad = jacobson_radical(a);

    ctx.add("radical", "nilpotency_index_bounded",
            rad.nilpotency_index <= std::max<std::size_t>(a.dim(), 1),
            "index " + std::to_string(rad.nilpotency_index) + ", dim " +
                std::to_string(a.dim()));

    bool two_sided = true;
    for (std::size_t r = 0; r < rad.basis.rows() && two_sided; ++r)
        for (std::size_t j = 0; j < a.dim() && two_sided; ++j) {
            std::vector<std::uint32_t> ej(a.dim(), 0);
            ej[j] = 1;
            if (!in_row_space(rad.basis,
                              a.multiply(ej, rad.basis.row_span(r))) ||
                !in_row_space(rad.basis,
                              a.multiply(rad.basis.row_span(r), ej)))
                two_sided = false;
        }
    ctx.add("radical", "two_sided_ideal", two_sided,
            "dim J = " + std::to_string(rad.basis.rows()));

    SemisimpleQuotient ss = semisimple_quotient(a);
    ctx.add("radical", "quotient_semisimple",
            jacobson_radical(ss.quotient).basis.rows() == 0,
            "quotient dim " + std::to_string(ss.quotient.dim()));

    Algebra op = opposite_algebra(a);
    ctx.add("radical", "opposite_radical_equal",
            jacobson_radical(op).basis == rad.basis, "");

    // sampled invertibility of 1 - y' x y
    Rng rng(derive_seed(ctx.seed, 0xad1));
    bool inv_ok = true;
    for (int round = 0; round < 1000 && inv_ok; ++round) {
        std::vector<std::uint32_t> x(a.dim(), 0), y(a.dim()), yp(a.dim());
        for (std::size_t r = 0; r < rad.basis.rows(); ++r) {
            std::uint32_t c = static_cast<std::uint32_t>(rng.below(fp.p()));
            for (std::size_t k = 0; k < a.dim(); ++k)
                x[k] = fp.add(x[k], fp.mul(c, rad.basis(r, k)));
        }
        for (auto& v : y) v = static_cast<std::uint32_t>(rng.below(fp.p()));
        for (auto& v : yp) v = static_cast<std::uint32_t>(rng.below(fp.p()));
        auto prod = a.multiply(a.multiply(yp, x), y);
        std::vector<std::uint32_t> elem(a.dim());
        for (std::size_t k = 0; k < a.dim(); ++k)
            elem[k] = fp.sub(a.one()[k], prod[k]);
        if (!a.is_invertible_element(elem)) inv_ok = false;
    }
    ctx.add("radical", "one_minus_yxy_invertible", inv_ok, "1000 samples");

    // Nakayama over the instance modules
    bool nak_ok = true;
    std::string nak_detail;
    for (const auto& [name, m] : ctx.inst.modules) {
        Matrix rm = radical_of_module(m, rad);
        if ((rm.rows() == m.dim()) != (m.dim() == 0)) {
            nak_ok = false;
            nak_detail = "M J = M for nonzero module " + name;
            break;
        }
        Module top = quotient_module(m, rm).quotient;
        if (radical_of_module(top, rad).rows() != 0) {
            nak_ok = false;
            nak_detail = "rad(top) != 0 for module " + name;
            break;
        }
    }
    ctx.add("radical", "nakayama", nak_ok,
            nak_ok ? std::to_string(ctx.inst.modules.size()) + " modules"
                   : nak_detail);
}

void verify_fitting(VerifyContext& ctx) {
    Rng rng(derive_seed(ctx.seed, 0xf17));
    bool ok = true;
    std::string detail;
    std::size_t checked = 0;
    for (const auto& [name, m] : ctx.inst.modules) {
        if (m.dim() == 0) continue;
        EndAlgebra end = end_algebra(m);
        for (int round = 0; round < 20; ++round) {
            std::vector<std::uint32_t> coords(end.dim());
            for (auto& c : coords)
                c = static_cast<std::uint32_t>(rng.below(m.p()));
            Matrix phi = end.to_matrix(coords);
            FittingSplit fs = fitting_split(m, phi);
            std::size_t di = fs.image_part.summand.dim();
            std::size_t dk = fs.kernel_part.summand.dim();
            Matrix stacked = vstack(fs.image_part.iota, fs.kernel_part.iota);
            if (di + dk != m.dim() || rank_of(stacked) != m.dim()) {
                ok = false;
                detail = "failed on module " + name;
                break;
            }
            ++checked;
        }
        if (!ok) break;
    }
    ctx.add("fitting", "image_kernel_direct_sum", ok,
            ok ? std::to_string(checked) + " random endomorphisms" : detail);
}

void verify_uniqueness(VerifyContext& ctx) {
    bool matched_ok = true, cert_ok = true, det_ok = true;
    std::string detail;
    for (const auto& [name, m] : ctx.inst.modules) {
        Decomposition d1 = krull_schmidt(m, derive_seed(ctx.seed, 1));
        Decomposition d2 = krull_schmidt(m, derive_seed(ctx.seed, 2));
        MatchResult match = match_decompositions(d1, d2);
        if (!match.matched) {
            matched_ok = false;
            detail = "module " + name + ": " + match.failure;
            break;
        }
        for (const auto& cls : d1.classes)
            if (!cls.certificate.local) cert_ok = false;
        // same seed, byte-identical report
        ReportOptions opt{ctx.seed, true};
        OrderedJson r1 = decompose_report(ctx.inst, name, d1, opt);
        OrderedJson r2 = decompose_report(
            ctx.inst, name, krull_schmidt(m, derive_seed(ctx.seed, 1)), opt);
        if (r1.dump() != r2.dump()) det_ok = false;
    }
    ctx.add("uniqueness", "two_seed_match", matched_ok,
            matched_ok ? std::to_string(ctx.inst.modules.size()) + " modules"
                       : detail);
    ctx.add("uniqueness", "certificates_local", cert_ok, "");
    ctx.add("uniqueness", "seed_determinism", det_ok, "");
}

void verify_covers(VerifyContext& ctx) {
    const auto algebra = ctx.inst.algebra;
    auto pims = projective_indecomposables(algebra, derive_seed(ctx.seed, 3));
    auto simples = simple_modules(pims);

    bool cover_ok = true;
    std::string detail;
    for (const auto& [name, m] : ctx.inst.modules) {
        CoverResult c = projective_cover(m, derive_seed(ctx.seed, 4));
        if (!c.essential || rank_of(c.epi) != m.dim()) {
            cover_ok = false;
            detail = "module " + name;
            break;
        }
    }
    ctx.add("covers", "instance_covers_essential", cover_ok,
            cover_ok ? std::to_string(ctx.inst.modules.size()) + " modules"
                     : detail);

    bool simple_ok = true;
    for (const auto& s : simples) {
        CoverResult c1 = projective_cover(s, derive_seed(ctx.seed, 5));
        CoverResult c2 = projective_cover(s, derive_seed(ctx.seed, 6));
        EndAlgebra end = end_algebra(c1.cover);
        if (!is_local(*end.algebra).local) simple_ok = false;
        Matrix alpha = cover_uniqueness_check(c1, c2);
        if (!is_invertible(alpha)) simple_ok = false;
    }
    ctx.add("covers", "simple_covers_local_and_unique", simple_ok,
            std::to_string(simples.size()) + " simples");

    // projrad: implication everywhere, equivalence on projective targets
    bool implication_ok = true, equivalence_ok = true;
    std::size_t strict_cases = 0;
    Rng rng(derive_seed(ctx.seed, 0x9c));
    for (const auto& [xname, x] : ctx.inst.modules)
        for (const auto& [yname, y] : ctx.inst.modules) {
            HomSpace h = hom_space(x, y);
            if (h.dim() == 0) continue;
            bool y_projective = is_projective(y, pims, derive_seed(ctx.seed, 7));
            std::vector<Matrix> probes = h.basis();
            for (int round = 0; round < 5; ++round) {
                std::vector<std::uint32_t> coords(h.dim());
                for (auto& c : coords)
                    c = static_cast<std::uint32_t>(rng.below(x.p()));
                probes.push_back(h.to_matrix(coords));
            }
            for (const auto& phi : probes) {
                ProjRadCheck chk = projrad_equivalence_check(phi, x, y);
                if (chk.im_in_rad && !chk.in_radhom) implication_ok = false;
                if (y_projective && chk.im_in_rad != chk.in_radhom)
                    equivalence_ok = false;
                if (!chk.im_in_rad && chk.in_radhom) ++strict_cases;
            }
        }
    ctx.add("covers", "projrad_implication", implication_ok, "");
    ctx.add("covers", "projrad_projective_equivalence", equivalence_ok, "");
    ctx.info("covers", "projrad_strict_case",
             strict_cases > 0
                 ? "found " + std::to_string(strict_cases) +
                       " radical morphisms with image outside the radical "
                       "(non-projective targets)"
                 : "none");
}

}  // namespace

VerifyOutcome run_verify(const Instance& inst, const std::string& suite,
                         std::uint64_t seed) {
    if (suite != "all" && suite != "radical" && suite != "covers" &&
        suite != "uniqueness" && suite != "fitting")
        throw ValidationError("unknown verify suite: " + suite);

    VerifyContext ctx{inst, seed};
    if (suite == "all" || suite == "radical") verify_radical(ctx);
    if (suite == "all" || suite == "fitting") verify_fitting(ctx);
    if (suite == "all" || suite == "uniqueness") verify_uniqueness(ctx);
    if (suite == "all" || suite == "covers") verify_covers(ctx);

    ReportOptions opt{seed, false};
    OrderedJson j = report_head("verify", inst, opt);
    j["suite"] = suite;
    j["results"] = std::move(ctx.results);
    j["all_pass"] = ctx.all_pass;
    return VerifyOutcome{std::move(j), ctx.all_pass};
}

std::string render_text(const OrderedJson& report) {
    std::ostringstream out;
    const std::string command = report.at("command").get<std::string>();
    out << command << " (p = " << report.at("field").at("p").get<std::uint64_t>()
        << ", seed = " << report.at("seed").get<std::uint64_t>() << ")\n";

    if (command == "decompose") {
        out << "module " << report.at("module").get<std::string>() << " (dim "
            << report.at("module_dim").get<std::size_t>() << ")\n";
        for (const auto& c : report.at("summand_classes")) {
            out << "  summand dim " << c.at("dim").get<std::size_t>() << " x "
                << c.at("multiplicity").get<std::size_t>() << "  [certificate: "
                << c.at("certificate").at("kind").get<std::string>() << "]\n";
        }
        out << "total indecomposable summands: "
            << report.at("total_summands").get<std::size_t>() << "\n";
    } else if (command == "projcover") {
        out << "module " << report.at("module").get<std::string>() << " (dim "
            << report.at("module_dim").get<std::size_t>() << ")\n"
            << "cover dim " << report.at("cover_dim").get<std::size_t>()
            << ", kernel dim " << report.at("kernel_dim").get<std::size_t>()
            << ", essential: "
            << (report.at("essential").get<bool>() ? "yes" : "no") << "\n";
        for (const auto& u : report.at("cover_composition"))
            out << "  " << u.at("pim").get<std::string>() << " x "
                << u.at("count").get<std::size_t>() << "\n";
    } else if (command == "hom") {
        out << "hom(" << report.at("source").get<std::string>() << ", "
            << report.at("target").get<std::string>()
            << ") dim = " << report.at("dim").get<std::size_t>() << "\n";
    } else if (command == "end") {
        out << "end(" << report.at("module").get<std::string>()
            << ") dim = " << report.at("dim").get<std::size_t>()
            << (report.at("commutative").get<bool>() ? " (commutative)" : "")
            << "\n";
    } else if (command == "radhom") {
        out << "rad(" << report.at("source").get<std::string>() << ", "
            << report.at("target").get<std::string>()
            << ") dim = " << report.at("rad_dim").get<std::size_t>()
            << " inside hom dim = " << report.at("hom_dim").get<std::size_t>()
            << "\n";
    } else if (command == "is-iso") {
        out << report.at("left").get<std::string>()
            << (report.at("isomorphic").get<bool>() ? " ~ " : " !~ ")
            << report.at("right").get<std::string>() << "\n";
    } else if (command == "verify") {
        for (const auto& r : report.at("results")) {
            std::string status = r.at("status").get<std::string>();
            std::string line = status == "pass" ? "PASS"
                               : status == "fail" ? "FAIL"
                                                  : "INFO";
            out << line << " " << r.at("suite").get<std::string>() << "."
                << r.at("property").get<std::string>();
            std::string detail = r.at("detail").get<std::string>();
            if (!detail.empty()) out << " (" << detail << ")";
            out << "\n";
        }
        out << (report.at("all_pass").get<bool>() ? "all properties pass"
                                                  : "PROPERTY FAILURES")
            << "\n";
    }
    return out.str();
}

}  // namespace summand
