// Acceptance suite: ten exact, seeded criteria covering the decomposition
// engine end to end. Prints one PASS/FAIL line per criterion; exit status is
// the number of failures.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "summand/decompose.hpp"
#include "summand/instance.hpp"
#include "summand/projcover.hpp"
#include "summand/report.hpp"
#include "summand/rng.hpp"

using namespace summand;

namespace {

int failures = 0;

void criterion(int n, const std::string& name, bool ok,
               const std::string& detail = "") {
    std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", n,
                name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

template <typename F>
void run(int n, const std::string& name, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        criterion(n, name, false, std::string("exception: ") + e.what());
    }
}

struct CorpusEntry {
    std::string name;
    Module module;
};

struct Corpus {
    std::vector<std::shared_ptr<const Algebra>> algebras;
    std::vector<CorpusEntry> modules;
};

Corpus build_corpus(const std::string& fixture_dir) {
    Corpus c;
    for (const std::string file : {"a2.json", "kxy_f5.json",
                                   "uppertri_f5.json", "s3_f7.json"}) {
        Instance inst = load_instance(fixture_dir + "/" + file);
        c.algebras.push_back(inst.algebra);
        for (const auto& [name, m] : inst.modules)
            c.modules.push_back(CorpusEntry{file + ":" + name, m});
    }
    // seeded random monomial quiver algebras with random modules
    for (std::uint64_t round = 0; round < 10; ++round) {
        std::uint32_t p = round % 2 ? 11 : 13;
        auto a = corpus::random_quiver_algebra(p, derive_seed(1001, round));
        c.algebras.push_back(a);
        c.modules.push_back(CorpusEntry{
            "random" + std::to_string(round),
            corpus::random_module(a, derive_seed(2002, round))});
    }
    return c;
}

// multiset of isomorphism classes with multiplicities, matched by the
// indecomposable criterion
struct ClassMultiset {
    std::vector<std::pair<Module, std::size_t>> classes;

    static ClassMultiset of(const Decomposition& dec) {
        ClassMultiset ms;
        for (const auto& cls : dec.classes)
            ms.classes.emplace_back(cls.representative, cls.multiplicity);
        return ms;
    }

    // subtract the other multiset; false if anything is missing
    bool subtract(const ClassMultiset& other) {
        for (const auto& [rep, mult] : other.classes) {
            bool found = false;
            for (auto& [mine, mymult] : classes) {
                if (mine.dim() != rep.dim()) continue;
                if (!indecomposable_isomorphism(mine, rep)) continue;
                if (mymult < mult) return false;
                mymult -= mult;
                found = true;
                break;
            }
            if (!found) return false;
        }
        return true;
    }

    bool empty() const {
        return std::all_of(classes.begin(), classes.end(),
                           [](const auto& c) { return c.second == 0; });
    }
};

}  // namespace

int main(int argc, char** argv) {
    const std::string fixture_dir =
        argc > 1 ? argv[1] : SUMMAND_FIXTURE_DIR;

    Corpus corpus_set = build_corpus(fixture_dir);

    run(1, "fitting identity on 100 seeded random instances", [&] {
        std::size_t checked = 0;
        for (std::uint64_t round = 0; checked < 100; ++round) {
            std::uint32_t p = round % 2 ? 11 : 13;
            auto a = corpus::random_quiver_algebra(p, derive_seed(11, round));
            Module m = corpus::random_module(a, derive_seed(12, round));
            EndAlgebra end = end_algebra(m);
            Rng rng(derive_seed(13, round));
            Matrix phi = corpus::random_endomorphism(end, rng, p);
            FittingSplit fs = fitting_split(m, phi);
            std::size_t di = fs.image_part.summand.dim();
            std::size_t dk = fs.kernel_part.summand.dim();
            if (di + dk != m.dim()) {
                criterion(1, "fitting identity", false,
                          "dimension mismatch at round " +
                              std::to_string(round));
                return;
            }
            Matrix stacked = vstack(fs.image_part.iota, fs.kernel_part.iota);
            if (rank_of(stacked) != m.dim()) {
                criterion(1, "fitting identity", false,
                          "nontrivial intersection at round " +
                              std::to_string(round));
                return;
            }
            ++checked;
        }
        criterion(1, "fitting identity on 100 seeded random instances", true,
                  "100 instances, exact");
    });

    run(2, "krull-schmidt uniqueness under two seeds", [&] {
        for (const auto& entry : corpus_set.modules) {
            Decomposition d1 = krull_schmidt(entry.module, 1);
            Decomposition d2 = krull_schmidt(entry.module, 2);
            MatchResult match = match_decompositions(d1, d2);
            if (!match.matched) {
                criterion(2, "krull-schmidt uniqueness", false,
                          entry.name + ": " + match.failure);
                return;
            }
            // multisets of (dim, multiplicity) are identical
            std::multiset<std::pair<std::size_t, std::size_t>> s1, s2;
            for (const auto& cls : d1.classes)
                s1.insert({cls.representative.dim(), cls.multiplicity});
            for (const auto& cls : d2.classes)
                s2.insert({cls.representative.dim(), cls.multiplicity});
            if (!(s1 == s2)) {
                criterion(2, "krull-schmidt uniqueness", false,
                          entry.name + ": (dim, multiplicity) multisets differ");
                return;
            }
        }
        criterion(2, "krull-schmidt uniqueness under two seeds", true,
                  std::to_string(corpus_set.modules.size()) +
                      " corpus modules");
    });

    run(3, "idempotent enumeration oracle agrees with certificates", [&] {
        std::size_t checked = 0;
        for (const auto& entry : corpus_set.modules) {
            if (entry.module.dim() == 0) continue;
            EndAlgebra end = end_algebra(entry.module);
            if (oracles::power_count(entry.module.p(), end.dim()) > 16384)
                continue;
            bool oracle_indecomposable =
                oracles::only_trivial_idempotents(end, entry.module.dim());
            Decomposition dec = krull_schmidt(entry.module, 5);
            bool engine_indecomposable = dec.classes.size() == 1 &&
                                         dec.classes[0].multiplicity == 1 &&
                                         dec.classes[0].certificate.local;
            if (oracle_indecomposable != engine_indecomposable) {
                criterion(3, "idempotent enumeration oracle", false,
                          entry.name);
                return;
            }
            ++checked;
        }
        criterion(3, "idempotent enumeration oracle agrees with certificates",
                  true, std::to_string(checked) + " modules with |End| <= 2^14");
    });

    run(4, "radical correctness on corpus algebras", [&] {
        Rng rng(404);
        for (const auto& a : corpus_set.algebras) {
            const Fp fp = a->field();
            RadicalIdeal rad = jacobson_radical(*a);
            if (rad.nilpotency_index > std::max<std::size_t>(a->dim(), 1)) {
                criterion(4, "radical correctness", false,
                          "nilpotency index exceeds dim");
                return;
            }
            SemisimpleQuotient ss = semisimple_quotient(*a);
            if (jacobson_radical(ss.quotient).basis.rows() != 0) {
                criterion(4, "radical correctness", false,
                          "quotient has a nonzero radical");
                return;
            }
            if (!(jacobson_radical(opposite_algebra(*a)).basis == rad.basis)) {
                criterion(4, "radical correctness", false,
                          "opposite algebra radical differs");
                return;
            }
            for (int round = 0; round < 1000; ++round) {
                std::vector<std::uint32_t> x(a->dim(), 0), y(a->dim()),
                    yp(a->dim());
                for (std::size_t r = 0; r < rad.basis.rows(); ++r) {
                    auto coeff =
                        static_cast<std::uint32_t>(rng.below(fp.p()));
                    for (std::size_t k = 0; k < a->dim(); ++k)
                        x[k] = fp.add(x[k], fp.mul(coeff, rad.basis(r, k)));
                }
                for (auto& v : y)
                    v = static_cast<std::uint32_t>(rng.below(fp.p()));
                for (auto& v : yp)
                    v = static_cast<std::uint32_t>(rng.below(fp.p()));
                auto prod = a->multiply(a->multiply(yp, x), y);
                std::vector<std::uint32_t> elem(a->dim());
                for (std::size_t k = 0; k < a->dim(); ++k)
                    elem[k] = fp.sub(a->one()[k], prod[k]);
                if (!a->is_invertible_element(elem)) {
                    criterion(4, "radical correctness", false,
                              "1 - y'xy not invertible");
                    return;
                }
            }
        }
        criterion(4, "radical correctness on corpus algebras", true,
                  std::to_string(corpus_set.algebras.size()) +
                      " algebras, 1000 samples each");
    });

    run(5, "nakayama: rad M = M J, and M J = M only for M = 0", [&] {
        std::size_t oracle_checked = 0;
        for (const auto& entry : corpus_set.modules) {
            const Module& m = entry.module;
            Matrix rad_m = radical_of_module(m);
            if ((rad_m.rows() == m.dim()) != (m.dim() == 0)) {
                criterion(5, "nakayama", false, entry.name + ": M J = M");
                return;
            }
            Module top = quotient_module(m, rad_m).quotient;
            if (radical_of_module(top).rows() != 0) {
                criterion(5, "nakayama", false,
                          entry.name + ": top has a radical");
                return;
            }
            // independent oracle where enumeration is feasible: rad M equals
            // the intersection of all maximal submodules
            std::size_t t = top.dim();
            if (t > 0 && oracles::power_count(m.p(), t) <= 20000) {
                auto maxes = oracles::maximal_submodules(m);
                if (maxes.empty()) {
                    criterion(5, "nakayama", false,
                              entry.name + ": no maximal submodules found");
                    return;
                }
                // intersect via defining normal vectors
                Matrix normals(0, m.dim(), m.field());
                for (const auto& u : maxes)
                    normals = vstack(normals, kernel_basis(u));
                Matrix intersection =
                    row_space(left_kernel(normals.transpose()));
                if (!(intersection == rad_m)) {
                    criterion(5, "nakayama", false,
                              entry.name +
                                  ": maximal-submodule intersection differs");
                    return;
                }
                ++oracle_checked;
            }
        }
        criterion(5, "nakayama: rad M = M J, and M J = M only for M = 0",
                  true,
                  std::to_string(corpus_set.modules.size()) + " modules, " +
                      std::to_string(oracle_checked) +
                      " against the maximal-submodule oracle");
    });

    run(6, "projective covers of simples over 10 random algebras", [&] {
        for (std::uint64_t round = 0; round < 10; ++round) {
            std::uint32_t p = round % 2 ? 11 : 13;
            auto a = corpus::random_quiver_algebra(p, derive_seed(606, round));
            auto pims = projective_indecomposables(a, derive_seed(66, round));
            auto simples = simple_modules(pims);
            for (const auto& s : simples) {
                CoverResult c1 = projective_cover(s, derive_seed(67, round));
                CoverResult c2 = projective_cover(s, derive_seed(68, round));
                if (!c1.essential ||
                    !is_essential_epi(c1.epi, c1.cover, s)) {
                    criterion(6, "projective covers", false,
                              "cover not essential");
                    return;
                }
                EndAlgebra end = end_algebra(c1.cover);
                if (!is_local(*end.algebra).local) {
                    criterion(6, "projective covers", false,
                              "cover End not local");
                    return;
                }
                Matrix alpha = cover_uniqueness_check(c1, c2);
                if (!is_invertible(alpha) || !(alpha * c2.epi == c1.epi)) {
                    criterion(6, "projective covers", false,
                              "comparison isomorphism failed");
                    return;
                }
            }
        }
        criterion(6, "projective covers of simples over 10 random algebras",
                  true, "essential + local + unique, exact");
    });

    run(7, "projrad equivalence on projective targets + kxy fixture", [&] {
        // 200 sampled morphisms into projective targets across the corpus
        std::size_t sampled = 0;
        Rng rng(707);
        for (const auto& a : corpus_set.algebras) {
            auto pims = projective_indecomposables(a, 7);
            std::vector<Module> targets;
            for (const auto& pim : pims) targets.push_back(pim.module);
            if (pims.size() >= 2) {
                std::vector<Module> two = {pims[0].module, pims[1].module};
                targets.push_back(direct_sum(a, two).sum);
            }
            std::vector<Module> sources = targets;
            sources.push_back(regular_module(a));
            for (const auto& x : sources)
                for (const auto& y : targets) {
                    if (sampled >= 200) break;
                    HomSpace h = hom_space(x, y);
                    if (h.dim() == 0) continue;
                    for (int round = 0; round < 4 && sampled < 200; ++round) {
                        std::vector<std::uint32_t> coords(h.dim());
                        for (auto& cc : coords)
                            cc = static_cast<std::uint32_t>(
                                rng.below(a->p()));
                        Matrix phi = h.to_matrix(coords);
                        ProjRadCheck chk =
                            projrad_equivalence_check(phi, x, y);
                        if (chk.im_in_rad != chk.in_radhom) {
                            criterion(7, "projrad equivalence", false,
                                      "mismatch on a projective target");
                            return;
                        }
                        ++sampled;
                    }
                }
        }
        if (sampled < 200) {
            criterion(7, "projrad equivalence", false,
                      "only sampled " + std::to_string(sampled));
            return;
        }
        // over k[x,y]/(x^2,y^2) the inclusion of the maximal submodule
        // X = span{x, xy} into Y = rad Lambda is a radical morphism whose
        // image escapes rad Y: the strict case (false, true)
        Instance kxy = load_instance(fixture_dir + "/kxy_f5.json");
        const Module* x = kxy.find_module("X");
        const Module* y = kxy.find_module("Y");
        if (!x || !y) {
            criterion(7, "projrad equivalence", false,
                      "kxy fixture lacks X or Y");
            return;
        }
        Matrix inclusion = Matrix::from_rows(kxy.field, {{1, 0, 0}, {0, 0, 1}});
        ProjRadCheck chk = projrad_equivalence_check(inclusion, *x, *y);
        bool strict_ok = !chk.im_in_rad && chk.in_radhom;
        criterion(7, "projrad equivalence on projective targets + kxy fixture",
                  strict_ok && sampled >= 200,
                  "200 samples exact; fixture gives (false, true)");
    });

    run(8, "regular modules of linear A_n quivers, n = 2..5, p = 11", [&] {
        for (std::size_t n = 2; n <= 5; ++n) {
            auto qa = algebra_from_quiver(fixtures::an_quiver(n), Fp(11));
            auto a = std::make_shared<Algebra>(std::move(qa.algebra));
            // path-count oracle: dim A = n (n + 1) / 2
            if (a->dim() != n * (n + 1) / 2) {
                criterion(8, "A_n quivers", false, "path count off");
                return;
            }
            Decomposition dec = krull_schmidt(regular_module(a), 8);
            if (dec.classes.size() != n) {
                criterion(8, "A_n quivers", false,
                          "n = " + std::to_string(n) + ": found " +
                              std::to_string(dec.classes.size()) +
                              " classes");
                return;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (dec.classes[i].representative.dim() != i + 1 ||
                    dec.classes[i].multiplicity != 1) {
                    criterion(8, "A_n quivers", false,
                              "n = " + std::to_string(n) +
                                  ": wrong dims/multiplicities");
                    return;
                }
            }
        }
        criterion(8, "regular modules of linear A_n quivers, n = 2..5, p = 11",
                  true, "dims n..1, each multiplicity 1");
    });

    run(9, "exchange property on 50 random idempotent splits", [&] {
        std::size_t done = 0, nontrivial = 0;
        for (std::uint64_t round = 0; done < 50; ++round) {
            std::uint32_t p = round % 2 ? 11 : 13;
            auto a = corpus::random_quiver_algebra(p, derive_seed(909, round));
            Module m = corpus::random_module(a, derive_seed(910, round));
            EndAlgebra end = end_algebra(m);
            // a seeded idempotent of End(m); trivial only when m is
            // indecomposable (then X' = m, X'' = 0 and t = 0)
            IdempotentSplit split =
                primitive_idempotent_split(*end.algebra,
                                           derive_seed(911, round));
            Module x1 = m, x2 = Module::zero(a);
            if (!split.local) {
                Matrix e = end.to_matrix(split.idempotent);
                x1 = split_idempotent(m, e).summand;
                x2 = split_idempotent(
                         m, Matrix::identity(m.dim(), m.field()) - e)
                         .summand;
                ++nontrivial;
            }

            ClassMultiset whole = ClassMultiset::of(krull_schmidt(m, 12));
            ClassMultiset part1 = ClassMultiset::of(krull_schmidt(x1, 13));
            ClassMultiset part2 = ClassMultiset::of(krull_schmidt(x2, 14));
            // the X'' classes embed into the X classes, and what remains is
            // exactly the multiset of X'
            if (!whole.subtract(part2) || !whole.subtract(part1) ||
                !whole.empty()) {
                criterion(9, "exchange property", false,
                          "multiset reconstitution failed at round " +
                              std::to_string(round));
                return;
            }
            ++done;
        }
        criterion(9, "exchange property on 50 random idempotent splits", true,
                  std::to_string(nontrivial) + " of 50 splits nontrivial");
    });

    run(10, "byte-identical JSON decompose reports under equal seeds", [&] {
        for (const std::string file : {"a2.json", "kxy_f5.json"}) {
            Instance inst = load_instance(fixture_dir + "/" + file);
            ReportOptions opt{31337, true};
            for (const auto& [name, m] : inst.modules) {
                OrderedJson r1 = decompose_report(
                    inst, name, krull_schmidt(m, opt.seed), opt);
                OrderedJson r2 = decompose_report(
                    inst, name, krull_schmidt(m, opt.seed), opt);
                if (r1.dump(2) != r2.dump(2)) {
                    criterion(10, "determinism", false, file + ":" + name);
                    return;
                }
            }
        }
        criterion(10, "byte-identical JSON decompose reports under equal seeds",
                  true, "fixtures, witnesses included");
    });

    if (failures == 0) std::printf("acceptance: all 10 criteria pass\n");
    return failures;
}
