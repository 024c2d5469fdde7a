#include "toric/pipeline.hpp"

#include "toric/linalg.hpp"
#include "toric/polytope.hpp"

#include <algorithm>
#include <limits>

namespace toric {

namespace {

Json int_json(const Integer& z) {
    static const Integer kBig = Integer(1) << 62;
    if (z > -kBig && z < kBig) return static_cast<long long>(z);
    return to_string(z);
}

Json ivec_json(const IVec& v) {
    Json a = Json::array();
    for (const auto& e : v) a.push_back(int_json(e));
    return a;
}

Json imat_json(const IMat& m) {
    Json a = Json::array();
    for (const auto& row : m) a.push_back(ivec_json(row));
    return a;
}

Json ratvec_json(const QVec& v) {
    Json a = Json::array();
    for (const auto& e : v) a.push_back(to_string(e));
    return a;
}

// coefficient list, lowest degree first
Json poly_json(const Poly& p) {
    Json a = Json::array();
    if (p.is_zero()) {
        a.push_back("0");
        return a;
    }
    for (const auto& e : p.coeffs()) a.push_back(to_string(e));
    return a;
}

Json indices_json(const std::vector<std::size_t>& v) {  // 1-based in documents
    Json a = Json::array();
    for (std::size_t i : v) a.push_back(i + 1);
    return a;
}

long long get_int_field(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw input_error(std::string(what) + " must be an integer");
    return j.get<long long>();
}

struct BaseAnalysis {
    Fan fan;
    HPolytope h;
    VRep vr;
    MomentData md;
    bool reflexive = false;
    bool delzant = false;
    bool ke = false;
    ReductivityVerdict red;
    DivisorClassInfo div;
    std::vector<std::vector<std::size_t>> orbits;
};

BaseAnalysis analyze_base(const Fan& fan) {
    BaseAnalysis a;
    a.fan = fan;
    a.h = anticanonical_polytope(fan);
    a.vr = enumerate_vertices(a.h);
    a.md = moments(a.h, a.vr);
    a.reflexive = is_reflexive(a.h, a.vr);
    a.delzant = is_delzant(a.h, a.vr);
    a.ke = is_ke(a.md);
    a.red = reductivity_verdict(fan);
    a.div = divisor_classes(fan);
    a.orbits = divisor_orbits(fan);
    return a;
}

Json fan_json(const Fan& f) {
    Json j;
    j["label"] = f.label;
    j["dim"] = f.dim;
    j["ray_count"] = f.rays.size();
    j["rays"] = imat_json(f.rays);
    j["ray_sum"] = ivec_json(ray_sum(f));
    return j;
}

Json polytope_json(const BaseAnalysis& a) {
    Json j;
    j["vertex_count"] = a.vr.vertices.size();
    j["reflexive"] = a.reflexive;
    j["delzant"] = a.delzant;
    j["volume"] = to_string(a.md.volume);
    j["first_moments"] = ratvec_json(a.md.first_moments);
    j["barycenter"] = ratvec_json(a.md.barycenter);
    return j;
}

Json reductivity_json(const ReductivityVerdict& r) {
    Json j;
    j["semisimple"] = r.semisimple;
    j["nill_sufficient"] = r.nill_sufficient;
    j["root_count"] = r.roots;
    j["semisimple_count"] = r.semisimple_roots;
    j["unipotent_count"] = r.unipotent_roots;
    return j;
}

Json divisors_json(const DivisorClassInfo& d,
                   const std::vector<std::vector<std::size_t>>& orbits) {
    Json j;
    j["free_rank"] = d.free_rank;
    Json rel = Json::array();
    for (const auto& row : d.relation_basis) rel.push_back(ivec_json(row));
    j["relation_basis"] = rel;
    Json ob = Json::array();
    for (const auto& o : orbits) ob.push_back(indices_json(o));
    j["orbits"] = ob;
    return j;
}

const char* verdict_name(KahlerVerdict v) {
    switch (v) {
        case KahlerVerdict::Valid: return "valid";
        case KahlerVerdict::Invalid: return "invalid";
        default: return "undecided";
    }
}

Json root_json(const RootFinding& f) {
    Json j;
    j["lo"] = to_string(f.interval.lo);
    j["hi"] = to_string(f.interval.hi);
    if (f.interval.exact) j["exact"] = to_string(*f.interval.exact);
    j["decimal"] = f.decimal;
    IsolatingInterval comp;
    comp.lo = Rational(1) - f.interval.hi;
    comp.hi = Rational(1) - f.interval.lo;
    comp.poly = compose_affine(f.interval.poly, Rational(1), Rational(-1));
    if (f.interval.exact) comp.exact = Rational(1) - *f.interval.exact;
    j["complement_decimal"] = decimal_string(comp, 6);
    j["kahler"] = verdict_name(f.verdict);
    return j;
}

Json decomposition_json(const ParametricFamily& fam) {
    Json first = Json::array(), second = Json::array();
    for (std::size_t i = 0; i < fam.offset_const.size(); ++i) {
        const Rational p = fam.offset_const[i];
        const Rational q = fam.offset_slope[i];
        first.push_back(Json::array({to_string(p), to_string(q)}));
        second.push_back(Json::array({to_string(p + q), to_string(-q)}));
    }
    Json j;
    j["offsets_are_affine_in_c"] = true;     // entries are (const, slope) pairs
    j["first"] = first;                      // b(c)
    j["second"] = second;                    // b(1-c)
    return j;
}

std::string orbit_verdict(const OrbitSolve& os) {
    if (os.moment_zero) return "moment-vanishes";
    if (os.window_empty) return "window-empty";
    if (os.numerator_zero) return "all-parameters-solve";
    if (os.any_valid) return "solutions-found";
    if (os.roots.empty()) return "no-real-roots";
    if (!os.decisive) return "undecided";
    return "no-valid-root";
}

// primitive integer vector pointing along a nonzero rational vector
IVec primitive_direction(const QVec& b) {
    Integer lcm = 1;
    for (const auto& e : b) {
        const Integer d = den(e);
        lcm = lcm / gcd_int(lcm, d) * d;
    }
    IVec w(b.size());
    Integer g = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        w[i] = num(b[i]) * (lcm / den(b[i]));
        g = gcd_int(g, abs_int(w[i]));
    }
    if (g == 0) throw degenerate_error("zero vector has no direction");
    for (auto& e : w) e /= g;
    return w;
}

}  // namespace

JobSpec job_from_json(const Json& doc) {
    try {
        JobSpec job;
        if (!doc.is_object()) throw input_error("job document must be an object");
        if (doc.contains("label")) job.label = doc.at("label").get<std::string>();

        const bool has_fan = doc.contains("fan");
        const bool has_bundle = doc.contains("bundle");
        if (has_fan == has_bundle)
            throw input_error("job needs exactly one of \"fan\" or \"bundle\"");
        if (has_fan) {
            const Json& f = doc.at("fan");
            const long long dim = get_int_field(f.at("dim"), "fan.dim");
            if (dim < 1 || dim > 16) throw input_error("fan.dim out of range");
            IMat rays;
            for (const Json& row : f.at("rays")) {
                IVec v;
                for (const Json& e : row) v.push_back(Integer(get_int_field(e, "ray entry")));
                rays.push_back(v);
            }
            job.inline_fan = make_fan(static_cast<std::size_t>(dim), rays, job.label);
        } else {
            const Json& b = doc.at("bundle");
            const long long m = get_int_field(b.at("m"), "bundle.m");
            const long long r = get_int_field(b.at("r"), "bundle.r");
            if (m < 1 || r < 1 || m + r > 14) throw input_error("bundle exponents out of range");
            job.bundle = std::make_pair(static_cast<int>(m), static_cast<int>(r));
        }

        if (doc.contains("transform")) {
            const Json& t = doc.at("transform");
            if (t.is_string()) {
                job.transform_mode = t.get<std::string>();
                if (job.transform_mode != "auto" && job.transform_mode != "identity")
                    throw input_error("transform must be \"auto\", \"identity\", or a matrix");
            } else if (t.is_array()) {
                job.transform_mode = "explicit";
                for (const Json& row : t) {
                    IVec v;
                    for (const Json& e : row)
                        v.push_back(Integer(get_int_field(e, "transform entry")));
                    job.transform_matrix.push_back(v);
                }
            } else {
                throw input_error("transform must be \"auto\", \"identity\", or a matrix");
            }
        }

        if (doc.contains("parametrized")) {
            const Json& p = doc.at("parametrized");
            if (p.is_string()) {
                if (p.get<std::string>() != "auto-orbits")
                    throw input_error("parametrized must be \"auto-orbits\" or an index list");
            } else if (p.is_array()) {
                std::vector<std::size_t> s;
                for (const Json& e : p) {
                    const long long i = get_int_field(e, "parametrized index");
                    if (i < 1) throw input_error("ray indices are 1-based");
                    s.push_back(static_cast<std::size_t>(i - 1));
                }
                job.parametrized = std::move(s);
            } else {
                throw input_error("parametrized must be \"auto-orbits\" or an index list");
            }
        }

        if (doc.contains("base_offset"))
            job.base_offset = parse_rational(doc.at("base_offset").get<std::string>());
        if (doc.contains("window")) {
            const Json& w = doc.at("window");
            if (!w.is_array() || w.size() != 2)
                throw input_error("window must be a two-element array");
            job.window_lo = parse_rational(w.at(0).get<std::string>());
            job.window_hi = parse_rational(w.at(1).get<std::string>());
            if (!(job.window_lo < job.window_hi)) throw input_error("window is empty");
        }
        if (doc.contains("coordinate")) {
            const Json& c = doc.at("coordinate");
            if (c.is_string()) {
                if (c.get<std::string>() != "auto")
                    throw input_error("coordinate must be \"auto\" or a 1-based index");
            } else {
                const long long i = get_int_field(c, "coordinate");
                if (i < 1) throw input_error("coordinate is 1-based");
                job.coordinate = static_cast<std::size_t>(i - 1);
            }
        }
        return job;
    } catch (const Json::exception& e) {
        throw input_error(std::string("malformed job document: ") + e.what());
    }
}

Json job_to_json(const JobSpec& job) {
    Json doc;
    if (!job.label.empty()) doc["label"] = job.label;
    if (job.inline_fan) {
        Json f;
        f["dim"] = job.inline_fan->dim;
        f["rays"] = imat_json(job.inline_fan->rays);
        doc["fan"] = f;
    } else if (job.bundle) {
        doc["bundle"] = Json{{"m", job.bundle->first}, {"r", job.bundle->second}};
    }
    if (job.transform_mode == "explicit")
        doc["transform"] = imat_json(job.transform_matrix);
    else
        doc["transform"] = job.transform_mode;
    if (job.parametrized)
        doc["parametrized"] = indices_json(*job.parametrized);
    else
        doc["parametrized"] = "auto-orbits";
    doc["base_offset"] = to_string(job.base_offset);
    doc["window"] = Json::array({to_string(job.window_lo), to_string(job.window_hi)});
    if (job.coordinate)
        doc["coordinate"] = *job.coordinate + 1;
    else
        doc["coordinate"] = "auto";
    return doc;
}

Fan job_fan(const JobSpec& job) {
    if (job.inline_fan) {
        Fan f = *job.inline_fan;
        if (!job.label.empty()) f.label = job.label;
        return f;
    }
    if (!job.bundle) throw input_error("job has no fan");
    Fan f = bundle_fan(job.bundle->first, job.bundle->second);
    if (!job.label.empty()) f.label = job.label;
    return f;
}

Json analyze_report(const JobSpec& job) {
    const Fan fan = job_fan(job);
    const BaseAnalysis a = analyze_base(fan);
    Json rep;
    rep["job"] = job_to_json(job);
    rep["fan"] = fan_json(fan);
    rep["polytope"] = polytope_json(a);
    rep["ke"] = Json{{"is_ke", a.ke}};
    rep["reductivity"] = reductivity_json(a.red);
    rep["divisor_classes"] = divisors_json(a.div, a.orbits);
    return rep;
}

CkeOutcome run_cke(const JobSpec& job) {
    const Fan fan = job_fan(job);
    const BaseAnalysis base = analyze_base(fan);

    CkeOutcome out;
    Json& rep = out.report;
    rep["job"] = job_to_json(job);
    rep["fan"] = fan_json(fan);
    rep["polytope"] = polytope_json(base);
    rep["ke"] = Json{{"is_ke", base.ke}};
    rep["reductivity"] = reductivity_json(base.red);
    rep["divisor_classes"] = divisors_json(base.div, base.orbits);
    Json notes = Json::array();

    const auto finish = [&](const std::string& cls) {
        rep["notes"] = notes;
        rep["classification"] = cls;
        out.classification = cls;
        out.decisive = cls != "inconclusive";
        return out;
    };

    if (base.ke) return finish("KE");
    if (!base.red.semisimple) return finish("non-reductive");

    // coordinate change pushing the moment direction onto the last axis
    const std::size_t n = fan.dim;
    IMat A;
    if (job.transform_mode == "identity") {
        A = identity_matrix<Integer>(n);
    } else if (job.transform_mode == "explicit") {
        A = job.transform_matrix;
    } else {
        const IVec dir = primitive_direction(base.md.first_moments);
        if (dir[n - 1] == 0) {
            notes.push_back("automatic transform unavailable: moment direction has zero last coordinate");
            return finish("inconclusive");
        }
        A = identity_matrix<Integer>(n);
        for (std::size_t j = 0; j < n; ++j) A[n - 1][j] = -dir[j];
    }

    Fan f2;
    try {
        f2 = apply_transform(fan, A);
    } catch (const std::runtime_error& e) {
        if (job.transform_mode == "explicit") throw input_error(e.what());
        notes.push_back(std::string("automatic transform failed: ") + e.what());
        return finish("inconclusive");
    }

    const HPolytope h2 = anticanonical_polytope(f2);
    const VRep vr2 = enumerate_vertices(h2);
    const MomentData md2 = moments(h2, vr2);
    const Integer det_a = det(A);
    const Rational vol_by_det = base.md.volume / Rational(abs_int(det_a));

    Json tj;
    tj["mode"] = job.transform_mode;
    tj["matrix"] = imat_json(A);
    tj["det"] = int_json(det_a);
    rep["transform"] = tj;

    Json t2;
    t2["rays"] = imat_json(f2.rays);
    t2["vertex_count"] = vr2.vertices.size();
    t2["volume"] = to_string(md2.volume);
    t2["volume_by_determinant"] = to_string(vol_by_det);
    t2["volumes_agree"] = md2.volume == vol_by_det;
    t2["first_moments"] = ratvec_json(md2.first_moments);
    rep["transformed"] = t2;
    if (md2.volume != vol_by_det)
        notes.push_back("volume determinant identity failed");

    std::vector<std::vector<std::size_t>> sets;
    if (job.parametrized)
        sets.push_back(*job.parametrized);
    else
        sets = base.orbits;
    if (sets.empty()) notes.push_back("no multi-ray divisor orbits to parametrize");

    bool any_valid = false;
    bool all_decisive = true;
    Json orbits = Json::array();
    for (const auto& S : sets) {
        Json oj;
        oj["rays"] = indices_json(S);
        try {
            const ParametricFamily fam = family_from_fan(f2, S, job.base_offset);
            oj["breakpoints_in_window"] =
                ratvec_json(chamber_breakpoints(fam, job.window_lo, job.window_hi));
            const Chamber ch =
                chamber_around(fam, job.base_offset, job.window_lo, job.window_hi);
            Json cj;
            cj["lo"] = to_string(ch.lo);
            cj["hi"] = to_string(ch.hi);
            cj["samples"] = ratvec_json(ch.samples);
            bool facets_ok = true;
            for (bool b : ch.signature.facet_active) facets_ok = facets_ok && b;
            cj["facets_all_active"] = facets_ok;
            oj["chamber"] = cj;

            const FamilyPolynomials fp = family_polynomials(fam, ch);
            oj["volume_poly"] = poly_json(fp.volume_poly);
            Json mps = Json::array();
            for (const auto& p : fp.moment_polys) mps.push_back(poly_json(p));
            oj["moment_polys"] = mps;

            std::size_t axis;
            if (job.coordinate) {
                if (*job.coordinate >= n) throw input_error("coordinate out of range");
                axis = *job.coordinate;
            } else {
                const auto ax = moment_axis(fp);
                if (ax) {
                    axis = *ax;
                } else {
                    bool all_zero = true;
                    for (const auto& p : fp.moment_polys) all_zero = all_zero && p.is_zero();
                    if (!all_zero)
                        throw degenerate_error("moment support is not one-dimensional");
                    axis = n - 1;
                }
            }
            oj["coordinate"] = axis + 1;

            const OrbitSolve os = solve_orbit(fp, axis);
            if (os.window_empty)
                oj["symmetric_window"] = nullptr;
            else
                oj["symmetric_window"] =
                    Json{{"lo", to_string(os.win_lo)}, {"hi", to_string(os.win_hi)}};
            oj["numerator"] = poly_json(os.numerator);
            Json roots = Json::array();
            std::size_t valid = 0;
            for (const auto& r : os.roots) {
                roots.push_back(root_json(r));
                if (r.verdict == KahlerVerdict::Valid) ++valid;
            }
            oj["roots"] = roots;
            oj["valid_count"] = valid;
            oj["decomposition"] = decomposition_json(fam);
            oj["verdict"] = orbit_verdict(os);
            any_valid = any_valid || os.any_valid;
            all_decisive = all_decisive && os.decisive;
        } catch (const input_error&) {
            throw;
        } catch (const std::runtime_error& e) {
            oj["error"] = e.what();
            all_decisive = false;
        }
        orbits.push_back(oj);
    }
    rep["orbits"] = orbits;

    if (any_valid) return finish("cKE-not-KE");
    if (all_decisive) return finish("reductive-no-cKE-found");
    return finish("inconclusive");
}

Json scan_report(int max_dim) {
    if (max_dim < 3) throw input_error("scan needs max dimension >= 3");
    Json doc;
    doc["max_dim"] = max_dim;
    Json rows = Json::array();
    for (int dim = 3; dim <= max_dim; ++dim) {
        for (int r = 1; 2 * r + 1 <= dim; ++r) {
            const int m = dim - r - 1;
            if (m < r) continue;
            Json row;
            row["m"] = m;
            row["r"] = r;
            row["dim"] = dim;
            row["label"] = "bundle(" + std::to_string(m) + "," + std::to_string(r) + ")";
            try {
                JobSpec js;
                js.bundle = std::make_pair(m, r);
                const CkeOutcome oc = run_cke(js);
                row["ke"] = oc.report.at("ke").at("is_ke");
                row["semisimple"] = oc.report.at("reductivity").at("semisimple");
                std::size_t valid = 0;
                if (oc.report.contains("orbits"))
                    for (const Json& oj : oc.report.at("orbits"))
                        if (oj.contains("valid_count"))
                            valid += oj.at("valid_count").get<std::size_t>();
                row["valid_roots"] = valid;
                row["classification"] = oc.classification;
            } catch (const std::exception& e) {
                row["error"] = e.what();
            }
            rows.push_back(row);
        }
    }
    doc["rows"] = rows;
    return doc;
}

std::vector<std::string> fixture_names() { return {"d5b", "d6", "d19", "remark-5d"}; }

JobSpec fixture_job(const std::string& name) {
    JobSpec job;
    job.label = name;
    if (name == "d5b") {
        job.bundle = std::make_pair(3, 1);
        job.parametrized = std::vector<std::size_t>{3, 6};  // rays 4 and 7
        job.window_lo = Rational(1, 4);
        job.window_hi = Rational(3, 4);
        return job;
    }
    if (name == "d6") {
        job.bundle = std::make_pair(3, 2);
        job.parametrized = std::vector<std::size_t>{3, 4, 7};  // rays 4, 5, 8
        job.window_lo = Rational(1, 4);
        job.window_hi = Rational(3, 4);
        return job;
    }
    if (name == "d19") {
        job.bundle = std::make_pair(1, 2);
        return job;
    }
    if (name == "remark-5d") {
        IMat rays = {
            {1, 0, 0, 0, 0},  {0, 1, 0, 0, 0},  {0, 0, 1, 0, 0},
            {0, 0, 0, 1, 0},  {0, 0, 0, 0, 1},  {-1, -1, 0, 0, 1},
            {0, 0, -1, 0, -1}, {0, 0, 0, -1, -1}, {0, 0, 0, 0, -1},
        };
        job.inline_fan = make_fan(5, rays, name);
        return job;
    }
    throw input_error("unknown fixture \"" + name + "\" (see the fixtures command)");
}

}  // namespace toric
