#include "tlab/json_io.hpp"

namespace tlab {

namespace {

Json complex_json(cplx z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json vector_json(const std::vector<cplx>& v) {
    Json a = Json::array();
    for (const cplx& x : v) a.push_back(complex_json(x));
    return a;
}

Json word_json(const SchwarzWord& w) {
    Json f = Json::array();
    for (const cplx& a : w.factors()) f.push_back(complex_json(a));
    return Json{{"rotation", complex_json(w.rotation())},
                {"leading_power", w.leading_power()},
                {"factors", f}};
}

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const BoundReport& r) {
    Json j;
    j["family"] = r.family;
    j["d1"] = r.jet.d1;
    j["d2"] = r.jet.d2;
    j["cond_t22"] = r.cond_t22;
    j["cond_t31"] = r.cond_t31;
    j["t22"] = optional_json(r.t22);
    j["t31"] = optional_json(r.t31);
    if (!r.t22) j["t22_not_asserted"] = r.t22_formula;
    if (!r.t31) j["t31_not_asserted"] = r.t31_formula;
    Json fs = Json::array();
    for (const auto& e : r.fs) {
        fs.push_back(Json{{"lambda_re", e.lambda.real()}, {"lambda_im", e.lambda.imag()}, {"bound", e.bound}});
    }
    j["fs"] = fs;
    return j;
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["family"] = r.family;
    j["theorem"] = to_string(r.theorem);
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["bound"] = r.bound;
    j["max_observed"] = r.max_observed;
    j["argmax_index"] = r.argmax_index;
    j["margin_histogram"] = r.margin_histogram;
    Json v = Json::array();
    for (const auto& viol : r.violations) {
        v.push_back(Json{{"index", viol.index}, {"value", viol.value}, {"word", word_json(viol.word)}});
    }
    j["violations"] = v;
    return j;
}

Json to_json(const ExtremalCertificate& c) {
    Json j;
    j["family"] = c.family;
    j["b2"] = complex_json(c.jet.b2);
    j["b3"] = complex_json(c.jet.b3);
    j["attained_t22"] = c.t22.attained;
    j["bound_t22"] = c.t22.bound;
    j["attained_t31"] = c.t31.attained;
    j["bound_t31"] = c.t31.bound;
    j["gaps"] = Json{{"t22", c.t22.gap}, {"t31", c.t31.gap}};
    j["asserted"] = Json{{"t22", c.t22.asserted}, {"t31", c.t31.asserted}};
    return j;
}

Json to_json(const OracleResult& r, double bound) {
    Json j;
    j["value"] = r.value;
    j["bound"] = bound;
    j["deficit"] = bound - r.value;
    j["grid"] = r.grid;
    j["refined"] = r.refined;
    j["w1"] = complex_json(r.argmax.w1);
    j["w2"] = complex_json(r.argmax.w2);
    return j;
}

Json to_json(const Check& c) {
    return Json{{"lhs", c.lhs}, {"bound", c.bound}, {"margin", c.margin}, {"asserted", c.asserted}};
}

Json to_json(const BallMargins& m) {
    Json j;
    j["b2"] = complex_json(m.b2);
    j["b3"] = complex_json(m.b3);
    j["t22"] = to_json(m.t22);
    j["t31"] = to_json(m.t31);
    return j;
}

Json to_json(const PolydiscMargins& m) {
    Json j;
    j["res"] = to_json(m.res);
    j["t31"] = to_json(m.un2);
    j["t31_homogeneous"] = to_json(m.un2_homogeneous);
    return j;
}

Json to_json(const HighdimSweep& s) {
    Json j;
    j["n"] = s.n;
    j["norm"] = to_string(s.kind);
    j["samples"] = s.samples;
    j["seed"] = s.seed;
    j["min_margin"] = Json{{"ball_t22", s.min_ball_t22},
                           {"ball_t31", s.min_ball_t31},
                           {"polydisc_res", s.min_res},
                           {"polydisc_t31", s.min_un2},
                           {"polydisc_t31_homogeneous", s.min_un2_homogeneous}};
    Json v = Json::array();
    for (const auto& smp : s.violations) {
        Json e;
        e["index"] = smp.index;
        e["z"] = vector_json(smp.z);
        e["word"] = smp.word;
        e["direction"] = smp.direction;
        e["ball"] = to_json(smp.ball);
        if (smp.polydisc) e["polydisc"] = to_json(*smp.polydisc);
        v.push_back(e);
    }
    j["violation_count"] = s.violations.size();
    j["violations"] = v;
    return j;
}

}  // namespace tlab
