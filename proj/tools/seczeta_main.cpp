// seczeta: command-line front end over the library layers. Every run is
// deterministic for a fixed invocation, including --jobs > 1 (parallel scan
// cells merge in key order). Exit codes: 0 ok, 2 domain error, 3 unresolved
// precision.

#include "seczeta/cfrac.hpp"
#include "seczeta/closed_forms.hpp"
#include "seczeta/diophantine.hpp"
#include "seczeta/modular.hpp"
#include "seczeta/numeric_eval.hpp"
#include "seczeta/quadsurd.hpp"
#include "seczeta/reduction.hpp"
#include "seczeta/unimodular.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace seczeta;
using ordered_json = nlohmann::ordered_json;

namespace {

enum class Format { human, jsonl, csv };

struct Config {
    long digits = 50;
    std::string format;  // empty = per-command default
    std::string out_path;
    unsigned jobs = 1;
};

Format pick_format(const Config& cfg, Format dflt) {
    if (cfg.format.empty()) return dflt;
    if (cfg.format == "human") return Format::human;
    if (cfg.format == "json-lines") return Format::jsonl;
    if (cfg.format == "csv") return Format::csv;
    throw std::domain_error("unknown format: " + cfg.format);
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::domain_error("empty rational literal");
    try {
        mpq_class q(s, 10);
        if (q.get_den() == 0) throw std::domain_error("zero denominator in: " + s);
        return Rational(Int(q.get_num()), Int(q.get_den()));
    } catch (const std::invalid_argument&) {
        throw std::domain_error("invalid rational literal: " + s);
    }
}

Int parse_int(const std::string& s) {
    if (s.empty()) throw std::domain_error("empty integer literal");
    try {
        return Int(s, 10);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("invalid integer literal: " + s);
    }
}

long parse_long(const std::string& s) {
    Int v = parse_int(s);
    if (!mpz_fits_slong_p(v.get_mpz_t()))
        throw std::domain_error("integer out of range: " + s);
    return v.get_si();
}

// "2,4", "1..30", "-20..20,25": comma list of integers and a..b ranges,
// expanded, sorted, deduplicated
std::vector<long> parse_range_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::domain_error("empty item in range list: " + s);
        auto dots = tok.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_long(tok));
        } else {
            long lo = parse_long(tok.substr(0, dots));
            long hi = parse_long(tok.substr(dots + 2));
            if (lo > hi) throw std::domain_error("empty range: " + tok);
            if (hi - lo > 1000000) throw std::domain_error("range too large: " + tok);
            for (long v = lo; v <= hi; ++v) out.push_back(v);
        }
    }
    if (out.empty()) throw std::domain_error("empty range list");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

QuadSurd parse_zspec(const std::string& spec, const std::string& scale_str) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::domain_error("z-spec must be sqrt:J, quad:a,b,d, or rat:p/q");
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    QuadSurd z;
    if (kind == "sqrt") {
        z = QuadSurd::sqrt_of(parse_rational(rest));
    } else if (kind == "quad") {
        std::vector<std::string> parts;
        std::stringstream ss(rest);
        std::string tok;
        while (std::getline(ss, tok, ',')) parts.push_back(tok);
        if (parts.size() != 3)
            throw std::domain_error("quad spec needs three fields a,b,d");
        z = QuadSurd(parse_rational(parts[0]), parse_rational(parts[1]), parse_int(parts[2]));
    } else if (kind == "rat") {
        z = QuadSurd(parse_rational(rest));
    } else {
        throw std::domain_error("unknown z-spec kind: " + kind);
    }
    Rational scale = parse_rational(scale_str);
    return scale * z;
}

// √6, 1+√6, 1/2+1/2*√5, plain rationals as p/q
std::string pretty_surd(const QuadSurd& z) {
    if (z.is_rational()) return z.a().str();
    std::string out;
    if (!z.a().is_zero()) {
        out = z.a().str();
        if (z.b().sign() > 0) out += "+";
    }
    if (z.b() == Rational(-1)) out += "-";
    else if (!(z.b() == Rational(1))) out += z.b().str() + "*";
    out += "√" + std::to_string(z.d());
    return out;
}

std::string err_str(const BigReal& v) {
    BigFloat e(32);
    mpfr_set(e.raw(), v.err(), MPFR_RNDU);
    return e.str(3);
}

std::string fmt_s(double s) {
    if (s == std::floor(s) && std::abs(s) < 1e15)
        return std::to_string(static_cast<long>(s));
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", s);
    return buf;
}

ordered_json json_s(double s) {
    if (s == std::floor(s) && std::abs(s) < 1e15)
        return ordered_json(static_cast<long>(s));
    return ordered_json(s);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

void write_output(const Config& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw std::domain_error("cannot open output file: " + cfg.out_path);
    f << text;
}

// ---------------------------------------------------------------- exact ----

struct ExactArgs {
    long k = 0;
    std::string family;
    long j = 0;
    long n = 0;
    bool j_given = false;
    bool n_given = false;
    std::string z;
    std::string scale = "1";
    bool cotangent = false;
};

int run_exact(const Config& cfg, const ExactArgs& a) {
    Format fmt = pick_format(cfg, Format::human);
    std::ostringstream out;
    if (!a.family.empty() && !a.z.empty())
        throw std::domain_error("choose either --family or --z, not both");
    if (a.family.empty() && a.z.empty())
        throw std::domain_error("one of --family or --z is required");

    std::string function = a.cotangent ? "xi" : "psi";
    unsigned k = 0;
    if (a.k < 1 || a.k > 1000000) throw std::domain_error("--k out of range");
    k = static_cast<unsigned>(a.k);

    std::string coeff_plain, coeff_pretty, argument_plain, argument_pretty;
    ordered_json rec;
    rec["function"] = function;
    rec["k"] = a.k;

    if (!a.family.empty()) {
        if (a.cotangent)
            throw std::domain_error("--cotangent applies to --z mode only; the families are secant-side");
        if (!a.j_given) throw std::domain_error("--family requires --j");
        std::optional<ExactPsiValue> v;
        if (a.family == "gen1") {
            v = psi_gen1(k, a.j);
        } else if (a.family == "gen2") {
            v = psi_gen2(k, a.j);
        } else if (a.family == "semiperiod") {
            if (k != 2) throw std::domain_error("the semiperiod family is k = 2 only");
            v = psi2_semiperiod_family(a.j);
        } else if (a.family == "pell") {
            if (k != 2) throw std::domain_error("the Pell family is k = 2 only");
            if (!a.n_given) throw std::domain_error("--family pell requires --n");
            v = psi2_pell_family(a.j, a.n);
        } else if (a.family == "fixed") {
            if (k < 2 || k % 2 != 0)
                throw std::domain_error("k must be an even integer >= 2");
            std::vector<FixedPointScanEntry> log;
            auto res = fixed_point_matrix(Int(a.j), &log);
            if (!res) {
                // report the exhausted scan; the value stays unresolved
                if (fmt == Format::jsonl) {
                    rec["family"] = "fixed";
                    rec["j"] = a.j;
                    rec["error"] = "no factorable Pell solution within the scan cap";
                    ordered_json scan = ordered_json::array();
                    for (const auto& e : log) {
                        ordered_json row;
                        row["x"] = e.X.get_str();
                        row["y"] = e.Y.get_str();
                        row["factorable"] = e.factorable;
                        scan.push_back(row);
                    }
                    rec["scan"] = scan;
                    out << rec.dump() << "\n";
                } else {
                    out << "no factorable Pell solution for j=" << a.j << " within "
                        << log.size() << " scanned solutions\n";
                    for (const auto& e : log)
                        out << "  X=" << e.X.get_str() << " Y=" << e.Y.get_str()
                            << " factorable=" << (e.factorable ? "yes" : "no") << "\n";
                }
                write_output(cfg, out.str());
                return 3;
            }
            QuadSurd arg = QuadSurd::sqrt_of(Rational(a.j));
            PsiRelation rel = push_relation(k, res->word, arg);
            Rational c = solve_fixed(rel);
            v = ExactPsiValue{k, arg, c, Family::fixed_point};
            rec["pell_index"] = static_cast<long>(res->pell_index);
            rec["word"] = res->word.str();
        } else {
            throw std::domain_error("unknown family: " + a.family);
        }
        coeff_plain = v->coefficient.str();
        coeff_pretty = coeff_plain;
        argument_plain = v->argument.str();
        argument_pretty = pretty_surd(v->argument);
        rec["family"] = a.family;
        rec["j"] = a.j;
        if (a.n_given) rec["n"] = a.n;
    } else {
        QuadSurd z = parse_zspec(a.z, a.scale);
        ExactValue v = a.cotangent ? xi_exact(k, z) : psi_exact(k, z);
        coeff_plain = v.coeff.str();
        coeff_pretty = pretty_surd(v.coeff);
        argument_plain = z.str();
        argument_pretty = pretty_surd(z);
        rec["argument_spec"] = a.z;
        rec["orbit_steps"] = static_cast<long>(v.steps);
    }
    rec["argument"] = argument_plain;
    rec["coefficient"] = coeff_plain;
    rec["pi_power"] = a.k;

    switch (fmt) {
        case Format::human:
            out << coeff_pretty << " × π^" << k
                << " (argument " << argument_pretty << ")\n";
            break;
        case Format::jsonl:
            out << rec.dump() << "\n";
            break;
        case Format::csv:
            out << "function,k,family,j,n,argument,coefficient,pi_power\n";
            out << function << "," << k << "," << a.family << ","
                << (a.j_given ? std::to_string(a.j) : "") << ","
                << (a.n_given ? std::to_string(a.n) : "") << ","
                << csv_escape(argument_plain) << "," << csv_escape(coeff_plain)
                << "," << k << "\n";
            break;
    }
    write_output(cfg, out.str());
    return 0;
}

// -------------------------------------------------------------- numeric ----

struct NumericArgs {
    double s = 2.0;
    std::string z;
    std::string scale = "1";
    bool cotangent = false;
    bool direct = false;
};

int run_numeric(const Config& cfg, const NumericArgs& a) {
    Format fmt = pick_format(cfg, Format::human);
    std::ostringstream out;
    if (a.z.empty()) throw std::domain_error("--z is required");
    QuadSurd z = parse_zspec(a.z, a.scale);
    bool integral = (a.s == std::floor(a.s));

    BigReal value(64);
    if (z.is_rational()) {
        if (a.cotangent)
            throw std::domain_error("the cotangent series diverges at rational points");
        Rational r = z.a();
        if (mpz_even_p(r.den().get_mpz_t()))
            throw std::domain_error("exclude rational points with even denominators");
        if (!integral || a.s < 2.0)
            throw std::domain_error("rational points need integer s >= 2");
        value = psi_rational_point(static_cast<long>(a.s), r.num(), r.den(), cfg.digits);
    } else if (a.cotangent) {
        if (!integral)
            throw std::domain_error("the cotangent series needs odd integer s >= 3");
        long si = static_cast<long>(a.s);
        value = a.direct ? xi_direct(si, z, cfg.digits) : cotangent_zeta(si, z, cfg.digits);
    } else {
        value = a.direct ? psi_direct(a.s, z, cfg.digits) : psi_numeric(a.s, z, cfg.digits);
    }

    bool resolved = meets_digits(value, cfg.digits);
    switch (fmt) {
        case Format::human:
            out << value.str_with_error(cfg.digits) << "\n";
            if (!resolved)
                out << "unresolved: error bound misses the " << cfg.digits
                    << "-digit target\n";
            break;
        case Format::jsonl: {
            ordered_json rec;
            rec["function"] = a.cotangent ? "xi" : "psi";
            rec["s"] = json_s(a.s);
            rec["argument"] = z.str();
            rec["digits"] = cfg.digits;
            rec["value"] = value.str(cfg.digits);
            rec["error_bound"] = err_str(value);
            rec["resolved"] = resolved;
            out << rec.dump() << "\n";
            break;
        }
        case Format::csv:
            out << "function,s,argument,digits,value,error_bound,resolved\n";
            out << (a.cotangent ? "xi" : "psi") << "," << fmt_s(a.s) << ","
                << csv_escape(z.str()) << "," << cfg.digits << ","
                << value.str(cfg.digits) << "," << err_str(value) << ","
                << (resolved ? "true" : "false") << "\n";
            break;
    }
    write_output(cfg, out.str());
    return resolved ? 0 : 3;
}

// ----------------------------------------------------------------- scan ----

int run_scan(const Config& cfg, const std::string& k_list, const std::string& j_list) {
    Format fmt = pick_format(cfg, Format::jsonl);
    std::ostringstream out;
    std::vector<unsigned> ks;
    for (long k : parse_range_list(k_list)) {
        if (k < 2 || k % 2 != 0)
            throw std::domain_error("scan needs even k >= 2, got " + std::to_string(k));
        ks.push_back(static_cast<unsigned>(k));
    }
    std::vector<long> js = parse_range_list(j_list);
    for (long j : js)
        if (j < 1) throw std::domain_error("scan needs j >= 1, got " + std::to_string(j));

    std::vector<ScanRecord> recs = conjecture1_scan(ks, js, cfg.digits, cfg.jobs);
    if (fmt == Format::csv) out << "k,j,digits,recognized,residual,verified\n";
    size_t ok = 0;
    for (const ScanRecord& r : recs) {
        std::string recog = r.recognized ? r.recognized->str() : "";
        std::string resid = r.residual.str(3);
        if (r.verified) ++ok;
        switch (fmt) {
            case Format::human:
                out << "k=" << r.k << " j=" << r.j
                    << " recognized=" << (recog.empty() ? "-" : recog)
                    << " residual=" << resid
                    << " verified=" << (r.verified ? "yes" : "no") << "\n";
                break;
            case Format::jsonl: {
                ordered_json rec;
                rec["k"] = static_cast<long>(r.k);
                rec["j"] = r.j;
                rec["digits"] = r.digits;
                if (r.recognized) rec["recognized"] = recog;
                else rec["recognized"] = nullptr;
                rec["residual"] = resid;
                rec["verified"] = r.verified;
                out << rec.dump() << "\n";
                break;
            }
            case Format::csv:
                out << r.k << "," << r.j << "," << r.digits << "," << recog << ","
                    << resid << "," << (r.verified ? "true" : "false") << "\n";
                break;
        }
    }
    write_output(cfg, out.str());
    return ok > 0 ? 0 : 3;
}

// ----------------------------------------------------------------- beta ----

int run_beta(const Config& cfg, const std::string& k_list, bool profile) {
    Format fmt = pick_format(cfg, Format::human);
    std::ostringstream out;
    std::vector<unsigned> ks;
    for (long k : parse_range_list(k_list))
        if (k >= 2 && k % 2 == 0) ks.push_back(static_cast<unsigned>(k));
    if (ks.empty()) throw std::domain_error("no even k >= 2 in the requested range");

    if (fmt == Format::csv) {
        out << (profile ? "k,beta,denominator,predicted_primes,anomalous_primes\n"
                        : "k,beta\n");
    }
    for (unsigned k : ks) {
        if (!profile) {
            Rational b = beta(k);
            switch (fmt) {
                case Format::human:
                    out << "beta_" << k << " = " << b.str() << "\n";
                    break;
                case Format::jsonl: {
                    ordered_json rec;
                    rec["k"] = static_cast<long>(k);
                    rec["beta"] = b.str();
                    out << rec.dump() << "\n";
                    break;
                }
                case Format::csv:
                    out << k << "," << b.str() << "\n";
                    break;
            }
            continue;
        }
        DenominatorProfile p = denominator_profile(k);
        auto join = [](const std::vector<Int>& v) {
            std::string s;
            for (size_t i = 0; i < v.size(); ++i) {
                if (i) s += ";";
                s += v[i].get_str();
            }
            return s;
        };
        switch (fmt) {
            case Format::human:
                out << p.str() << "\n";
                break;
            case Format::jsonl: {
                ordered_json rec;
                rec["k"] = static_cast<long>(k);
                rec["beta"] = p.beta_value.str();
                rec["denominator"] = p.beta_value.den().get_str();
                ordered_json factors = ordered_json::array();
                for (const auto& [prime, e] : p.denominator_factors) {
                    ordered_json f;
                    f["p"] = prime.get_str();
                    f["e"] = e;
                    factors.push_back(f);
                }
                rec["denominator_factors"] = factors;
                ordered_json pred = ordered_json::array(), anom = ordered_json::array();
                for (const Int& q : p.predicted_primes) pred.push_back(q.get_str());
                for (const Int& q : p.anomalous_primes) anom.push_back(q.get_str());
                rec["predicted_primes"] = pred;
                rec["anomalous_primes"] = anom;
                out << rec.dump() << "\n";
                break;
            }
            case Format::csv:
                out << k << "," << p.beta_value.str() << ","
                    << p.beta_value.den().get_str() << "," << join(p.predicted_primes)
                    << "," << join(p.anomalous_primes) << "\n";
                break;
        }
    }
    write_output(cfg, out.str());
    return 0;
}

// ----------------------------------------------------------------- pell ----

int run_pell(const Config& cfg, const std::string& j_list, long count) {
    Format fmt = pick_format(cfg, Format::human);
    std::ostringstream out;
    if (count < 1 || count > 1000) throw std::domain_error("--count must be in [1, 1000]");
    std::vector<long> js = parse_range_list(j_list);
    if (fmt == Format::csv) out << "j,index,x,y\n";
    size_t ok = 0, failed = 0;
    for (long j : js) {
        Int sq;
        bool square = j >= 0 && (mpz_root(sq.get_mpz_t(), Int(j).get_mpz_t(), 2),
                                 sq * sq == j);
        if (j < 2 || square) {
            ++failed;
            switch (fmt) {
                case Format::human:
                    out << "j=" << j << ": skipped (" << (j < 2 ? "needs j >= 2" : "square")
                        << ")\n";
                    break;
                case Format::jsonl: {
                    ordered_json rec;
                    rec["j"] = j;
                    rec["error"] = (j < 2) ? "needs j >= 2" : "square";
                    out << rec.dump() << "\n";
                    break;
                }
                case Format::csv:
                    break;  // error rows carry no solution columns
            }
            continue;
        }
        ++ok;
        auto sols = pell_solutions(Int(j), static_cast<size_t>(count));
        for (size_t i = 0; i < sols.size(); ++i) {
            switch (fmt) {
                case Format::human:
                    out << "j=" << j << " solution " << i << ": X="
                        << sols[i].first.get_str() << " Y=" << sols[i].second.get_str()
                        << "\n";
                    break;
                case Format::jsonl: {
                    ordered_json rec;
                    rec["j"] = j;
                    rec["index"] = static_cast<long>(i);
                    rec["x"] = sols[i].first.get_str();
                    rec["y"] = sols[i].second.get_str();
                    out << rec.dump() << "\n";
                    break;
                }
                case Format::csv:
                    out << j << "," << i << "," << sols[i].first.get_str() << ","
                        << sols[i].second.get_str() << "\n";
                    break;
            }
        }
    }
    if (ok == 0)
        throw std::domain_error("no admissible j in the list (need non-square j >= 2)");
    write_output(cfg, out.str());
    return 0;
}

// --------------------------------------------------------------- factor ----

int run_factor(const Config& cfg, const std::string& matrix) {
    Format fmt = pick_format(cfg, Format::human);
    std::ostringstream out;
    std::vector<Int> e;
    std::stringstream ss(matrix);
    std::string tok;
    while (std::getline(ss, tok, ',')) e.push_back(parse_int(tok));
    if (e.size() != 4) throw std::domain_error("--matrix needs four entries a,b,c,d");
    Mat2Z m(e[0], e[1], e[2], e[3]);
    if (m.det() != 1) throw std::domain_error("determinant must be 1");
    auto w = sanov_factor(m);
    if (!w)
        throw std::domain_error("matrix is not in the subgroup generated by A and B");
    long length = 0;
    for (const auto& l : w->letters) length += std::abs(l.exp);
    switch (fmt) {
        case Format::human:
            out << w->str() << "\n";
            break;
        case Format::jsonl: {
            ordered_json rec;
            ordered_json mj = ordered_json::array();
            for (const Int& v : e) mj.push_back(v.get_str());
            rec["matrix"] = mj;
            rec["word"] = w->str();
            rec["length"] = length;
            out << rec.dump() << "\n";
            break;
        }
        case Format::csv:
            out << "matrix,word,length\n";
            out << csv_escape(matrix) << "," << csv_escape(w->str()) << "," << length
                << "\n";
            break;
    }
    write_output(cfg, out.str());
    return 0;
}

// ----------------------------------------------------------- unimodular ----

int run_unimodular(const Config& cfg, const std::string& k_list) {
    Format fmt = pick_format(cfg, Format::human);
    std::ostringstream out;
    std::vector<unsigned> ks;
    for (long k : parse_range_list(k_list))
        if (k >= 2 && k % 2 == 0) ks.push_back(static_cast<unsigned>(k));
    if (ks.empty()) throw std::domain_error("no even k >= 2 in the requested range");

    if (fmt == Format::csv)
        out << "k,degree,deflated_degree,self_inversive,deviation,certified\n";
    size_t certified = 0;
    for (unsigned k : ks) {
        IntPolynomial p = conj_poly(k);
        bool si = self_inversive_check(p);
        UnimodularReport rep = unit_circle_deviation(p, cfg.digits);
        if (rep.certified) ++certified;
        std::string dev = rep.deviation.str(3);
        switch (fmt) {
            case Format::human:
                out << "k=" << k << ": " << p.str() << "\n";
                out << "  degree=" << rep.degree << " deflated=" << rep.deflated_degree
                    << " self-inversive=" << (si ? "yes" : "no") << " deviation=" << dev
                    << " certified=" << (rep.certified ? "yes" : "no") << "\n";
                break;
            case Format::jsonl: {
                ordered_json rec;
                rec["k"] = static_cast<long>(k);
                rec["degree"] = rep.degree;
                rec["deflated_degree"] = rep.deflated_degree;
                rec["polynomial"] = p.str();
                rec["self_inversive"] = si;
                rec["deviation"] = dev;
                rec["certified"] = rep.certified;
                out << rec.dump() << "\n";
                break;
            }
            case Format::csv:
                out << k << "," << rep.degree << "," << rep.deflated_degree << ","
                    << (si ? "true" : "false") << "," << dev << ","
                    << (rep.certified ? "true" : "false") << "\n";
                break;
        }
    }
    write_output(cfg, out.str());
    return certified > 0 ? 0 : 3;
}

// ---------------------------------------------------------------- audit ----

struct AuditArgs {
    std::string z;
    std::string scale = "1";
    double s = 2.0;
    long n = 1000;
    std::string window_scale = "1";
};

int run_audit(const Config& cfg, const AuditArgs& a) {
    Format fmt = pick_format(cfg, Format::human);
    std::ostringstream out;
    if (a.z.empty()) throw std::domain_error("--z is required");
    if (a.n < 2 || a.n > 1000000) throw std::domain_error("--N must be in [2, 1000000]");
    QuadSurd z = parse_zspec(a.z, a.scale);
    if (z.is_rational())
        throw std::domain_error("audit needs a quadratic irrational argument");

    std::vector<long> cutoffs = {a.n, 10 * a.n, 100 * a.n};
    SeriesAudit sa = series_audit(a.s, z, false, cutoffs);
    CFrac cf = cfrac_of_surd(z);
    std::string cf_str = "[" + cf.a0.get_str() + ";";
    for (const Int& q : cf.prefix) cf_str += " " + q.get_str();
    cf_str += " (";
    for (size_t i = 0; i < cf.period.size(); ++i)
        cf_str += (i ? " " : "") + cf.period[i].get_str();
    cf_str += ")]";
    std::vector<long> hard = hard_indices(z, a.n, parse_rational(a.window_scale));

    if (fmt == Format::human) {
        out << "argument: " << pretty_surd(z) << "\n";
        out << "continued fraction: " << cf_str << "\n";
        out << "a_max(2z) = " << sa.a_max.get_str()
            << "  term slope: |sec(π n z)| ≤ " << sa.slope.str() << " · n\n";
        for (const auto& [n, bound] : sa.tails)
            out << "tail past N=" << n << " (s=" << fmt_s(a.s)
                << "): ≤ " << bound.str(3) << "\n";
        out << "hard indices n ≤ " << a.n << " (gap < scale·log²n/n): "
            << hard.size() << "\n";
        for (long n : hard) {
            HalfIntegerGap g = nearest_half_integer_gap(z, Int(n), cfg.digits);
            out << "  n=" << n << " nearest=" << g.k.get_str() << "+1/2 gap="
                << g.gap.str(3) << " |sec| ≤ "
                << sec_magnitude_bound(z, Int(n), cfg.digits).str(3) << "\n";
        }
    } else if (fmt == Format::jsonl) {
        ordered_json rec;
        rec["record"] = "summary";
        rec["argument"] = z.str();
        rec["s"] = json_s(a.s);
        rec["continued_fraction"] = cf_str;
        rec["a_max"] = sa.a_max.get_str();
        rec["slope"] = sa.slope.str();
        ordered_json tails = ordered_json::array();
        for (const auto& [n, bound] : sa.tails) {
            ordered_json t;
            t["n"] = n;
            t["bound"] = bound.str(3);
            tails.push_back(t);
        }
        rec["tails"] = tails;
        rec["hard_index_count"] = static_cast<long>(hard.size());
        out << rec.dump() << "\n";
        for (long n : hard) {
            HalfIntegerGap g = nearest_half_integer_gap(z, Int(n), cfg.digits);
            ordered_json h;
            h["record"] = "hard_index";
            h["n"] = n;
            h["nearest_k"] = g.k.get_str();
            h["gap"] = g.gap.str(3);
            h["sec_bound"] = sec_magnitude_bound(z, Int(n), cfg.digits).str(3);
            out << h.dump() << "\n";
        }
    } else {
        out << "n,nearest_k,gap,sec_bound\n";
        for (long n : hard) {
            HalfIntegerGap g = nearest_half_integer_gap(z, Int(n), cfg.digits);
            out << n << "," << g.k.get_str() << "," << g.gap.str(3) << ","
                << sec_magnitude_bound(z, Int(n), cfg.digits).str(3) << "\n";
        }
    }
    write_output(cfg, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"secant zeta function toolkit"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--digits", cfg.digits, "decimal digits of working accuracy")
        ->envname("SECZETA_DIGITS")
        ->check(CLI::Range(20L, 10000L));
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"human", "json-lines", "csv"}));
    app.add_option("--out", cfg.out_path, "write output to a file instead of stdout");
    app.add_option("--jobs", cfg.jobs, "parallel scan cells")
        ->check(CLI::Range(1u, 256u));

    ExactArgs ea;
    CLI::App* exact = app.add_subcommand("exact", "exact value in units of pi^k");
    exact->fallthrough();
    exact->add_option("--k", ea.k, "weight")->required();
    exact->add_option("--family", ea.family, "gen1 | gen2 | semiperiod | pell | fixed");
    CLI::Option* oj = exact->add_option("--j", ea.j, "family index");
    CLI::Option* on = exact->add_option("--n", ea.n, "Pell family second index");
    exact->add_option("--z", ea.z, "argument spec sqrt:J | quad:a,b,d | rat:p/q");
    exact->add_option("--scale", ea.scale, "rational multiplier for --z");
    exact->add_flag("--cotangent", ea.cotangent, "evaluate the cotangent analogue");

    NumericArgs na;
    CLI::App* numeric = app.add_subcommand("numeric", "decimal value with error bound");
    numeric->fallthrough();
    numeric->add_option("--s", na.s, "exponent (real, >= 2)")->required();
    numeric->add_option("--z", na.z, "argument spec")->required();
    numeric->add_option("--scale", na.scale, "rational multiplier for --z");
    numeric->add_flag("--cotangent", na.cotangent, "cotangent series instead of secant");
    numeric->add_flag("--direct", na.direct, "force direct summation");

    std::string scan_k, scan_j;
    CLI::App* scan = app.add_subcommand("scan", "rational recognition over a (k, j) grid");
    scan->fallthrough();
    scan->add_option("--k", scan_k, "even weights, e.g. 2,4")->required();
    scan->add_option("--j", scan_j, "radicands, e.g. 1..30")->required();

    std::string beta_k;
    bool beta_profile = false;
    CLI::App* beta_cmd = app.add_subcommand("beta", "normalized psi_k(sqrt 6) sequence");
    beta_cmd->fallthrough();
    beta_cmd->add_option("--k", beta_k, "even weights, e.g. 2..40")->required();
    beta_cmd->add_flag("--profile", beta_profile, "denominator factorization report");

    std::string pell_j;
    long pell_count = 1;
    CLI::App* pell = app.add_subcommand("pell", "Pell equation solutions X^2 - j Y^2 = 1");
    pell->fallthrough();
    pell->add_option("--j", pell_j, "non-square j, e.g. 2..60")->required();
    pell->add_option("--count", pell_count, "solutions per j");

    std::string factor_matrix;
    CLI::App* factor = app.add_subcommand("factor", "word in A, B for a subgroup matrix");
    factor->fallthrough();
    factor->add_option("--matrix", factor_matrix, "entries a,b,c,d")->required();

    std::string uni_k;
    CLI::App* uni = app.add_subcommand("unimodular", "root location of the conjectured polynomials");
    uni->fallthrough();
    uni->add_option("--k", uni_k, "even weights, e.g. 2..40")->required();

    AuditArgs aa;
    CLI::App* audit = app.add_subcommand("audit", "hard indices and tail bounds for an argument");
    audit->fallthrough();
    audit->add_option("--z", aa.z, "argument spec")->required();
    audit->add_option("--scale", aa.scale, "rational multiplier for --z");
    audit->add_option("--s", aa.s, "exponent for the tail bounds");
    audit->add_option("--N", aa.n, "hard index search bound");
    audit->add_option("--window-scale", aa.window_scale, "hard index cutoff scale");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    ea.j_given = oj->count() > 0;
    ea.n_given = on->count() > 0;

    try {
        if (exact->parsed()) return run_exact(cfg, ea);
        if (numeric->parsed()) return run_numeric(cfg, na);
        if (scan->parsed()) return run_scan(cfg, scan_k, scan_j);
        if (beta_cmd->parsed()) return run_beta(cfg, beta_k, beta_profile);
        if (pell->parsed()) return run_pell(cfg, pell_j, pell_count);
        if (factor->parsed()) return run_factor(cfg, factor_matrix);
        if (uni->parsed()) return run_unimodular(cfg, uni_k);
        if (audit->parsed()) return run_audit(cfg, aa);
    } catch (const UnresolvedError& e) {
        std::cerr << "unresolved: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
