#include "dgbec/io.hpp"
#include "dgbec/random.hpp"
#include "dgbec/suites.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace dgbec;

namespace {

constexpr const char* kSchema = "schema dgbec-report 1";

struct Globals {
    std::string field;
    std::vector<int> window;
    std::uint64_t seed = 42;
    std::string format = "text";
    std::string output;
    std::string name;
};

// Machine lines, human summary and any constructed definitions.
struct Run {
    std::string command;
    std::vector<std::string> machine, summary;
    std::vector<Block> blocks;
    bool pass = true;

    void fact(const std::string& key, const std::string& value) { machine.push_back(key + " " + value); }
    void fact(const std::string& key, std::size_t value) { fact(key, std::to_string(value)); }
    bool check(const std::string& name, bool ok)
    {
        machine.push_back("check " + name + " " + (ok ? "pass" : "fail"));
        pass = pass && ok;
        return ok;
    }
    void say(const std::string& s) { summary.push_back(s); }
};

class Usage : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::optional<Field> field_flag(const Globals& g)
{
    if (g.field.empty()) return std::nullopt;
    if (g.field == "Q") return Field::rationals();
    std::size_t pos = 0;
    long long p = 0;
    try {
        p = std::stoll(g.field, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != g.field.size() || p < 2) throw Usage("--field expects a prime or Q");
    try {
        return Field::prime(static_cast<std::uint64_t>(p));
    } catch (const std::exception& e) {
        throw Usage(std::string("--field: ") + e.what());
    }
}

Field run_field(const Globals& g)
{
    auto f = field_flag(g);
    return f ? *f : Field::prime(7);
}

struct Loaded {
    Document doc;
    Store store;
};

Loaded load(const std::string& path, const Globals& g)
{
    std::ifstream in(path);
    if (!in) throw InputError(0, "cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    ElaborateOptions opt;
    opt.field = field_flag(g);
    if (!g.window.empty()) opt.window = std::make_pair(g.window[0], g.window[1]);
    Loaded l;
    l.doc = parse_document(ss.str());
    l.store = elaborate(l.doc, opt);
    return l;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string degree_list(const std::vector<int>& d)
{
    std::string s;
    for (int x : d) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s.empty() ? "-" : s;
}

std::string out_name(const Globals& g, const std::string& fallback) { return g.name.empty() ? fallback : g.name; }

const ObjectRef& object_ref(const Store& s, const std::string& name)
{
    auto it = s.objects.find(name);
    if (it == s.objects.end()) throw InputError(0, "no object named '" + name + "'");
    return it->second;
}

const BecObject& bec_ref(const Store& s, const std::string& name)
{
    auto it = s.becs.find(name);
    if (it == s.becs.end()) throw InputError(0, "no bec object named '" + name + "'");
    return it->second;
}

const ExtensionDef& extension_ref(const Store& s, const std::string& name, bool graded)
{
    auto it = s.extensions.find(name);
    if (it == s.extensions.end()) throw InputError(0, "no extension named '" + name + "'");
    if (it->second.graded != graded)
        throw InputError(0, "extension '" + name + "' must have " + (graded ? "module" : "object") + " terms");
    return it->second;
}

// A map between two objects of the store.
struct ObjectMap {
    const MapDef* def;
    DgObject source, target;
    std::string over;
};

ObjectMap object_map(const Store& s, const std::string& name)
{
    const MapDef& f = s.map(name);
    if (!s.objects.count(f.source) || !s.objects.count(f.target))
        throw InputError(0, "map '" + name + "' must go between objects");
    return {&f, s.objects.at(f.source).object, s.objects.at(f.target).object, s.objects.at(f.source).over};
}

std::string over_of_terms(const Store& s, const ExtensionDef& e)
{
    return e.terms.empty() ? std::string() : s.objects.at(e.terms.front()).over;
}

void add_object(Run& r, const std::string& name, const std::string& over, const DgObject& x)
{
    r.blocks.push_back(object_block(name, over, x));
}

void hom_lines(Run& r, const HomComplex& h)
{
    for (int n : h.degrees)
        r.fact("degree " + std::to_string(n), "dim " + std::to_string(h.dim(n)) + " cohomology " +
                                                  std::to_string(h.cohomology_dim(n)));
}

// Commands

void cmd_check(Run& r, const Loaded& l)
{
    const Store& s = l.store;
    std::size_t failed = 0;
    for (const auto& [kind, name] : s.order) {
        Report rep;
        bool ok = true;
        if (kind == "algebra")
            rep = check_algebra(*s.algebras.at(name));
        else if (kind == "module")
            rep = check_module(s.modules.at(name));
        else if (kind == "cdg-ring")
            rep = check_cdg_ring(*s.rings.at(name));
        else if (kind == "cdg-module" || kind == "complex" || kind == "object")
            rep = check_object(s.objects.at(name).object);
        else if (kind == "bec")
            rep = check_bec(s.becs.at(name));
        else if (kind == "map") {
            const MapDef& f = s.maps.at(name);
            auto base = [&](const std::string& n) -> GradedModule {
                if (s.modules.count(n)) return s.modules.at(n);
                if (s.objects.count(n)) return s.objects.at(n).object.module.base;
                return s.becs.at(n).base.module.base;
            };
            rep = check_map({base(f.source), base(f.target), f.degree, f.m});
            if (rep.empty() && s.objects.count(f.source) && s.objects.count(f.target))
                r.fact("map " + name + " closed",
                       yes_no(is_closed(s.objects.at(f.source).object, s.objects.at(f.target).object, f.degree, f.m)));
        } else if (kind == "extension") {
            const ExtensionDef& e = s.extensions.at(name);
            ok = e.graded ? is_exact(e.graded_ext) : is_z0_exact(e.complex);
            if (!ok) rep.push_back("not exact");
        } else if (kind == "witness")
            rep = validate_witness(s.witnesses.at(name));
        ok = rep.empty();
        r.check(kind + " " + name, ok);
        for (const auto& line : rep) r.fact("problem " + name, line);
        if (!ok) ++failed;
    }
    r.fact("definitions", s.order.size());
    r.say(failed ? std::to_string(failed) + " of " + std::to_string(s.order.size()) + " definitions fail their checks"
                 : "all " + std::to_string(s.order.size()) + " definitions pass their checks");
}

void cmd_hom(Run& r, const Loaded& l, const std::string& x, const std::string& y)
{
    const Store& s = l.store;
    if (s.becs.count(x) && s.becs.count(y)) {
        SpanComplex h = bec_hom(s.becs.at(x), s.becs.at(y));
        r.check("d_squared_zero", h.d_squared_zero());
        for (int i : h.degrees)
            r.fact("degree " + std::to_string(i),
                   "dim " + std::to_string(h.dim(i)) + " cohomology " + std::to_string(h.cohomology_dim(i)));
        r.say("bec Hom complex from " + x + " to " + y + " in " + std::to_string(h.degrees.size()) + " degrees");
        return;
    }
    HomComplex h = hom(object_ref(s, x).object, object_ref(s, y).object);
    r.check("d_squared_zero", h.d_squared_zero());
    hom_lines(r, h);
    r.say("Hom complex from " + x + " to " + y + " in " + std::to_string(h.degrees.size()) + " degrees");
}

void cmd_cohomology(Run& r, const Loaded& l, const std::string& x, const std::string& y)
{
    const Store& s = l.store;
    const DgObject& a = object_ref(s, x).object;
    if (!y.empty()) {
        HomComplex h = hom(a, object_ref(s, y).object);
        r.check("d_squared_zero", h.d_squared_zero());
        std::size_t total = 0;
        for (int n : h.degrees) {
            r.fact("H " + std::to_string(n), h.cohomology_dim(n));
            total += h.cohomology_dim(n);
        }
        r.say("H*(Hom(" + x + ", " + y + ")) has total dimension " + std::to_string(total));
        return;
    }
    const Matrix& d = a.module.d;
    if (!r.check("d_squared_zero", (d * d).is_zero())) {
        r.say(x + " is curved: d^2 != 0, so it has no cohomology");
        return;
    }
    std::size_t total = 0;
    for (int n : distinct_degrees(a.degrees())) {
        auto in = indices_of_degree(a.degrees(), n);
        auto out = indices_of_degree(a.degrees(), a.datum().reduce(static_cast<long long>(n) + 1));
        auto prev = indices_of_degree(a.degrees(), a.datum().reduce(static_cast<long long>(n) - 1));
        const std::size_t z = in.size() - rank(d.select(out, in));
        const std::size_t b = rank(d.select(in, prev));
        r.fact("H " + std::to_string(n), z - b);
        total += z - b;
    }
    r.say("H*(" + x + ") has total dimension " + std::to_string(total));
}

void cmd_nullhomotopy(Run& r, const Loaded& l, const std::string& name, const Globals& g)
{
    ObjectMap m = object_map(l.store, name);
    const int n = m.def->degree;
    if (!r.check("closed", is_closed(m.source, m.target, n, m.def->m))) {
        r.say(name + " is not closed");
        return;
    }
    auto h = null_homotopy(m.source, m.target, n, m.def->m);
    r.check("null_homotopic", h.has_value());
    if (h) {
        r.check("d_of_homotopy", d_hom(m.source, m.target, n - 1, *h) == m.def->m);
        r.blocks.push_back(map_block(out_name(g, name + "_h"), {m.def->source, m.def->target, n - 1, *h}));
        r.say(name + " is null-homotopic");
    } else {
        r.say(name + " is not null-homotopic");
    }
}

void cmd_bec(Run& r, const Loaded& l, const std::string& name)
{
    const BecObject& x = bec_ref(l.store, name);
    Report rep = check_bec(x);
    for (auto& line : rep) r.fact("problem", line);
    if (!r.check("bec_object", rep.empty())) {
        r.say(name + " is not a bec object");
        return;
    }
    SpanComplex h = bec_hom(x, x);
    r.check("d_squared_zero", h.d_squared_zero());
    UpsilonRecovery u = upsilon_recover(x);
    r.fact("dim", x.base.dim());
    r.fact("recovered_module_dim", u.module.dim());
    r.fact("recovered_module_degrees", degree_list(u.module.degrees));
    r.say(name + " is a bec object, Upsilon of a module of dimension " + std::to_string(u.module.dim()));
}

void cmd_phi(Run& r, const Loaded& l, const std::string& name, const Globals& g)
{
    const ObjectRef& a = object_ref(l.store, name);
    PhiData p = phi(a.object);
    r.check("bec_object", check_bec(p.object).empty());
    r.check("structure_maps", (p.pi_p * p.iota).is_identity() && (p.pi * p.iota_p).is_identity() &&
                                  (p.iota * p.pi_p + p.iota_p * p.pi).is_identity());
    r.fact("dim", p.object.base.dim());
    r.blocks.push_back(bec_block(out_name(g, "Phi_" + name), a.over, p.object));
    r.say("Phi(" + name + ") has dimension " + std::to_string(p.object.base.dim()));
}

void cmd_psi(Run& r, const Loaded& l, const std::string& name, const Globals& g)
{
    const BecObject& x = bec_ref(l.store, name);
    const std::string over = l.store.bec_over.at(name);
    DgObject p = psi_plus(x), m = psi_minus(x);
    r.check("psi_plus_object", check_object(p).empty());
    r.check("psi_minus_object", check_object(m).empty());
    const std::string base = out_name(g, name);
    add_object(r, "PsiPlus_" + base, over, p);
    add_object(r, "PsiMinus_" + base, over, m);
    r.say("Psi+ and Psi- of " + name + " have dimension " + std::to_string(p.dim()));
}

void cmd_xi(Run& r, const Loaded& l, const std::string& name, const Globals& g)
{
    const ObjectRef& a = object_ref(l.store, name);
    XiData x = xi(a.object);
    r.check("extension", z0_ses_check(x.sub, x.object, a.object, x.incl, x.proj));
    r.check("psi_plus_phi_iso", is_closed_iso(psi_plus(phi(a.object).object), x.object, xi_nat_iso(a.object)));
    add_object(r, out_name(g, "Xi_" + name), a.over, x.object);
    r.say("Xi(" + name + ") is an extension of " + name + " by " + name + "[-1]");
}

void cmd_becbec(Run& r, const Loaded& l, const std::string& name)
{
    const ObjectRef& a = object_ref(l.store, name);
    BecBecObject w = becbec(a.object);
    r.check("becbec_object", check_becbec(w).empty());
    BecBecInverse inv = becbec_inverse(w);
    r.check("inverse_iso", is_closed_iso(becbec(inv.object).base, w.base, inv.iso));
    r.check("inverse_h0", h0_dim(inv.object, a.object) == h0_dim(a.object, a.object));
    SpanComplex h = becbec_hom(w, w);
    HomComplex e = hom(a.object, a.object);
    bool dims = true;
    for (int i : e.degrees) dims = dims && h.dim(i) == e.dim(i);
    for (int i : h.degrees) dims = dims && h.dim(i) == e.dim(i);
    r.check("fully_faithful_dims", dims);
    r.fact("dim", w.base.dim());
    r.say("the iterated bec object of " + name + " has dimension " + std::to_string(w.base.dim()));
}

RingPtr ring_for(const Store& s, const std::string& module, const std::string& ring, std::string& over)
{
    if (!ring.empty()) {
        auto it = s.rings.find(ring);
        if (it == s.rings.end()) throw InputError(0, "no cdg-ring named '" + ring + "'");
        over = ring;
        return it->second;
    }
    const std::string alg = s.module_over.at(module);
    std::vector<std::string> found;
    for (const auto& [name, a] : s.ring_over)
        if (a == alg) found.push_back(name);
    if (found.size() == 1) {
        over = found[0];
        return s.rings.at(found[0]);
    }
    if (found.size() > 1) throw InputError(0, "several cdg-rings over '" + alg + "'; pass --ring");
    over = alg;
    return nullptr;
}

void cmd_g(Run& r, Loaded& l, const std::string& module, const std::string& ring, bool plus, const Globals& g)
{
    const GradedModule& m = l.store.module(module);
    std::string over;
    RingPtr rp = ring_for(l.store, module, ring, over);
    const bool complexes = !rp;
    if (complexes) rp = l.store.complex_ring(over);
    GradedModule mm = m;
    mm.alg = rp->alg;
    GModule gm = plus ? g_plus(rp, mm) : g_minus(rp, mm);
    r.check("cdg_module", check_cdg_module(gm.object).empty());
    const GSequence& sq = gm.sequence;
    r.check("canonical_sequence", ses_exact(sq.incl, sq.proj, sq.sub.degrees, gm.object.degrees(), sq.quotient.degrees));
    if (!plus) {
        Matrix iso = g_minus_to_shifted_plus(rp, mm);
        r.check("shifted_plus_iso", is_closed_iso(cdg_object(gm.object), shift(cdg_object(g_plus(rp, mm).object), 1).object, iso));
    }
    FreeCover fc = free_cover(gm.object.base);
    r.fact("dim", gm.object.dim());
    r.fact("free_cover_generators", fc.generator_degrees.size());
    r.fact("free_cover_degrees", degree_list(fc.generator_degrees));
    r.fact("graded_free", yes_no(fc.free.dim() == gm.object.dim()));
    DgObject x = complexes ? complex_object(gm.object) : cdg_object(gm.object);
    add_object(r, out_name(g, std::string(plus ? "Gplus_" : "Gminus_") + module), over, x);
    r.say(std::string(plus ? "G+(" : "G-(") + module + ") has dimension " + std::to_string(gm.object.dim()));
}

void cmd_twist(Run& r, const Loaded& l, const std::string& name, const std::string& cochain, const Globals& g)
{
    const ObjectRef& x = object_ref(l.store, name);
    const MapDef& a = l.store.map(cochain);
    if (a.source != name || a.target != name || a.degree != 1)
        throw InputError(0, "'" + cochain + "' must be a degree-1 endomorphism of '" + name + "'");
    if (!r.check("maurer_cartan", mc_check(x.object, a.m))) {
        r.say(cochain + " is not a Maurer-Cartan cochain");
        return;
    }
    DgObject t = twist(x.object, a.m);
    r.check("object", check_object(t).empty());
    add_object(r, out_name(g, name + "_" + cochain), x.over, t);
    r.say("twisted " + name + " by " + cochain);
}

void cmd_cone(Run& r, const Loaded& l, const std::string& name, const Globals& g)
{
    ObjectMap m = object_map(l.store, name);
    if (!r.check("closed_degree_0", m.def->degree == 0 && is_closed(m.source, m.target, 0, m.def->m))) {
        r.say(name + " is not a closed map of degree 0");
        return;
    }
    ConeData c = cone(m.source, m.target, m.def->m);
    r.check("object", check_object(c.object).empty());
    r.check("iota_closed", is_closed(m.target, c.object, 0, c.iota));
    r.check("pi_closed", is_closed(c.object, m.source, 1, c.pi));
    r.fact("dim", c.object.dim());
    add_object(r, out_name(g, "Cone_" + name), m.over, c.object);
    r.say("cone(" + name + ") has dimension " + std::to_string(c.object.dim()));
}

void cmd_tot(Run& r, const Loaded& l, const std::string& name, int start, const Globals& g)
{
    const ExtensionDef& e = extension_ref(l.store, name, false);
    bool complex = true;
    for (std::size_t i = 0; i < e.complex.maps.size(); ++i) {
        complex = complex && is_closed(e.complex.terms[i], e.complex.terms[i + 1], 0, e.complex.maps[i]);
        if (i + 1 < e.complex.maps.size()) complex = complex && (e.complex.maps[i + 1] * e.complex.maps[i]).is_zero();
    }
    if (!r.check("z0_complex", complex)) {
        r.say(name + " is not a complex of closed degree-0 maps");
        return;
    }
    TotData t = tot_of(e.complex, start);
    r.check("object", check_object(t.object).empty());
    r.fact("exact", yes_no(is_z0_exact(e.complex)));
    r.fact("dim", t.object.dim());
    add_object(r, out_name(g, "Tot_" + name), over_of_terms(l.store, e), t.object);
    r.say("Tot(" + name + ") from degree " + std::to_string(start) + " has dimension " + std::to_string(t.object.dim()));
}

void report_witness(Run& r, const AcyclicityWitness& w)
{
    Report rep = validate_witness(w);
    for (auto& line : rep) r.fact("problem", line);
    r.check("witness_valid", rep.empty());
    r.fact("depth", static_cast<std::size_t>(w.depth()));
    r.fact("nodes", w.node_count());
}

void cmd_resolve(Run& r, const Loaded& l, const std::string& name, std::size_t n, bool projective, const Globals& g)
{
    const ObjectRef& b = object_ref(l.store, name);
    Replacement p;
    try {
        p = projective ? graded_projective_replacement(b.object, n) : graded_injective_replacement(b.object, n);
    } catch (const DgError& e) {
        r.check("replacement", false);
        r.fact("reason", e.what());
        r.say(std::string("no replacement of length <= ") + std::to_string(n) + ": " + e.what());
        return;
    }
    r.check("replacement", true);
    r.check("map_closed", projective ? is_closed(p.object, b.object, 0, p.map) : is_closed(b.object, p.object, 0, p.map));
    r.check(projective ? "graded_projective" : "graded_injective",
            projective ? graded_projective(p.object.module.base) : graded_injective(p.object.module.base));
    r.check("resolution_exact", is_z0_exact(p.complex));
    r.fact("length", p.length);
    r.fact("dim", p.object.dim());
    report_witness(r, p.cone_witness);
    r.check("witness_depth_bound", p.cone_witness.depth() <= static_cast<int>(n) + 1);
    const std::string base = out_name(g, (projective ? "P_" : "J_") + name);
    add_object(r, base, b.over, p.object);
    r.blocks.push_back(witness_block(base + "_cone", b.over, p.cone_witness));
    r.say(std::string(projective ? "projective" : "injective") + " replacement of length " + std::to_string(p.length) +
          ", cone witness depth " + std::to_string(p.cone_witness.depth()));
}

void cmd_witness(Run& r, const Loaded& l, const std::string& name, int start, const Globals& g)
{
    const ExtensionDef& e = extension_ref(l.store, name, false);
    if (!r.check("exact", is_z0_exact(e.complex))) {
        r.say(name + " is not exact in Z0");
        return;
    }
    TotWitness w = tot_exact_witness(e.complex, start);
    report_witness(r, w.witness);
    r.blocks.push_back(witness_block(out_name(g, "W_" + name), over_of_terms(l.store, e), w.witness));
    r.say("Tot(" + name + ") is absolutely acyclic with a witness of depth " + std::to_string(w.witness.depth()));
}

void cmd_verify_witness(Run& r, const Loaded& l, const std::string& name)
{
    auto it = l.store.witnesses.find(name);
    if (it == l.store.witnesses.end()) throw InputError(0, "no witness named '" + name + "'");
    report_witness(r, it->second);
    r.fact("root", witness_kind_name(it->second.kind));
    r.say(r.pass ? "witness " + name + " verifies" : "witness " + name + " does not verify");
}

Ses ses_of(const ExtensionDef& e, const std::string& name)
{
    if (e.complex.terms.size() != 3) throw InputError(0, "extension '" + name + "' must have three terms");
    return {e.complex.terms[0], e.complex.terms[1], e.complex.terms[2], e.complex.maps[0], e.complex.maps[1]};
}

void cmd_approach(Run& r, const Loaded& l, const std::string& fname, const std::string& ename, int start,
                  const Globals& g)
{
    const ObjectRef& f = object_ref(l.store, fname);
    Ses s = ses_of(extension_ref(l.store, ename, false), ename);
    if (!r.check("ses", check_ses(s))) {
        r.say(ename + " is not a short exact sequence");
        return;
    }
    TotData t = tot_of(s.complex(), start);
    Rng rng(g.seed);
    Matrix ph = random_closed(f.object, t.object, 0, rng);
    r.fact("phi_rank", rank(ph));
    Approach a = approach(f.object, s, start, ph);
    r.check("q_closed", is_closed(a.g, f.object, 0, a.q));
    r.check("null_composite", d_hom(a.g, t.object, -1, a.homotopy) == ph * a.q);
    report_witness(r, a.cone_witness);
    r.fact("fast_path", yes_no(a.fast_path));
    r.fact("dim", a.g.dim());
    add_object(r, out_name(g, "G_" + fname), f.over, a.g);
    r.say("G -> " + fname + " of dimension " + std::to_string(a.g.dim()) + " kills the map to Tot(" + ename + ")");
}

void cmd_yoneda(Run& r, const Loaded& l, const std::string& name)
{
    const ExtensionDef& e = extension_ref(l.store, name, true);
    const NExtension& x = e.graded_ext;
    if (!r.check("exact", x.terms.size() >= 3 && is_exact(x))) {
        r.say(name + " is not an exact n-extension");
        return;
    }
    SplitResult sr = ext_class_is_split(x);
    const bool oracle = ext_class_oracle(x);
    r.check("oracle_agrees", sr.split == oracle);
    if (sr.retraction) r.check("retraction", (*sr.retraction * x.maps[0]).is_identity());
    r.fact("n", x.n());
    r.fact("split", yes_no(sr.split));
    r.fact("retraction_found", yes_no(sr.retraction.has_value()));
    r.say("the class of " + name + " in Ext^" + std::to_string(x.n()) + (sr.split ? " is zero" : " is not zero"));
}

void cmd_descend(Run& r, Loaded& l, const std::string& name, const Globals& g)
{
    const ExtensionDef& e = extension_ref(l.store, name, false);
    Z0Extension a{e.complex.terms, e.complex.maps};
    if (!r.check("exact", a.terms.size() >= 3 && is_exact(a))) {
        r.say(name + " is not an exact n-extension in Z0");
        return;
    }
    GradedSplitDescent d;
    try {
        d = graded_split_descent(a);
    } catch (const DgError& ex) {
        r.check("descent", false);
        r.fact("reason", ex.what());
        r.say(std::string("no descent: ") + ex.what());
        return;
    }
    NExtension pc = phi_extension(d.c), pa = phi_extension(a);
    r.check("descent", true);
    r.check("c_exact", is_exact(d.c));
    r.check("elementary_equivalence", is_elementary_equivalence(pc, pa, d.to_a));
    r.check("retraction", (d.retraction * d.c.maps[0]).is_identity());
    r.check("split_agrees", ext_class_oracle(pc) == ext_class_oracle(pa));
    std::string ds;
    for (auto& t : d.c.terms) ds += (ds.empty() ? "" : " ") + std::to_string(t.dim());
    r.fact("term_dims", ds);
    const std::string base = out_name(g, "C_" + name), over = over_of_terms(l.store, e);
    Block ext;
    ext.kind = "extension";
    ext.name = base;
    for (std::size_t i = 0; i < d.c.terms.size(); ++i) {
        const bool end = i == 0 || i + 1 == d.c.terms.size();
        const std::string tn = end ? e.terms[i == 0 ? 0 : e.terms.size() - 1] : base + "_" + std::to_string(i);
        if (!end) add_object(r, tn, over, d.c.terms[i]);
        ext.add({"term", tn});
    }
    for (const Matrix& m : d.c.maps) ext.add_matrix("map", m);
    r.blocks.push_back(ext);
    r.say("descended " + name + " to an extension whose Phi-image splits by an explicit retraction");
}

void cmd_demo(Run& r, const std::string& name, const Globals& g)
{
    DemoResult d = run_demo(name, run_field(g));
    r.fact("demo", d.name);
    for (auto& [k, v] : d.facts) r.fact(k, v);
    r.check("demo", d.pass);
    for (auto& s : d.summary) r.say(s);
}

void cmd_selftest(Run& r, const std::vector<std::string>& files, const Globals& g)
{
    SuiteOptions opt;
    opt.seed = g.seed;
    opt.field = run_field(g);
    SelftestReport rep = selftest(opt);
    r.fact("seed", std::to_string(g.seed));
    r.fact("field", opt.field.describe());
    for (auto& line : selftest_lines(rep)) r.machine.push_back(line);
    r.pass = rep.pass();
    std::size_t ops = 0, crit = 0;
    for (auto& c : rep.ops) ops += c.pass();
    for (auto& c : rep.criteria) crit += c.pass();
    for (const std::string& f : files) {
        Run sub;
        Loaded l = load(f, g);
        cmd_check(sub, l);
        for (auto& line : sub.machine) r.machine.push_back("fixture " + f + " " + line);
        r.check("fixture " + f, sub.pass);
    }
    r.say(std::to_string(ops) + " of " + std::to_string(rep.ops.size()) + " operation checks pass");
    r.say(std::to_string(crit) + " of " + std::to_string(rep.criteria.size()) + " invariant suites pass");
    if (!files.empty()) r.say(std::to_string(files.size()) + " extra fixture files checked");
}

void emit(const Run& r, const Globals& g, const Document& input)
{
    std::ostringstream out;
    out << kSchema << "\n";
    out << "command " << r.command << "\n";
    for (auto& line : r.machine) out << line << "\n";
    out << "status " << (r.pass ? "pass" : "fail") << "\n";
    if (g.format == "text") {
        out << "\n";
        for (auto& line : r.summary) out << line << "\n";
        if (!r.blocks.empty() && g.output.empty()) {
            Document d;
            d.blocks = r.blocks;
            out << "\n" << print_document(d);
        }
    }
    std::cout << out.str();
    if (!g.output.empty()) {
        Document d = input;
        for (auto& b : r.blocks) d.blocks.push_back(b);
        std::ofstream f(g.output);
        if (!f) throw InputError(0, "cannot write '" + g.output + "'");
        f << print_document(d);
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with CDG-modules, complexes and their bec categories"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--field", g.field, "Prime characteristic p or Q (overrides the datum)");
    app.add_option("--window", g.window, "Degree window lo hi for Z gradings")->expected(2);
    app.add_option("--seed", g.seed, "Seed for randomized steps");
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("-o,--output", g.output, "Write the input plus constructed definitions to a file");
    app.add_option("--name", g.name, "Name for the constructed definition");

    std::string file, a, b, ring;
    int start = 0;
    std::size_t length = 1;
    std::vector<std::string> files;
    std::map<std::string, CLI::App*> sub;
    auto command = [&](const std::string& name, const std::string& help) {
        CLI::App* c = app.add_subcommand(name, help);
        c->fallthrough();
        sub[name] = c;
        return c;
    };
    auto with_file = [&](CLI::App* c) { c->add_option("file", file, "Input document")->required(); };

    with_file(command("check", "Validate every definition of a document"));
    auto* c_hom = command("hom", "Hom complex between two objects or two bec objects");
    with_file(c_hom);
    c_hom->add_option("x", a)->required();
    c_hom->add_option("y", b)->required();
    auto* c_coh = command("cohomology", "Cohomology of an object, or of Hom(x, y)");
    with_file(c_coh);
    c_coh->add_option("x", a)->required();
    c_coh->add_option("y", b);
    for (auto [name, help, what] : std::vector<std::tuple<std::string, std::string, std::string>>{
             {"nullhomotopy", "Null-homotopy of a closed map", "map"},
             {"bec", "Check a bec object", "bec"},
             {"phi", "Phi of an object", "object"},
             {"psi", "Psi+ and Psi- of a bec object", "bec"},
             {"xi", "Xi of an object", "object"},
             {"becbec", "Iterated bec object and its inverse", "object"},
             {"cone", "Cone of a closed degree-0 map", "map"},
             {"verify-witness", "Replay every check of a witness", "witness"},
             {"yoneda-split", "Decide whether a Yoneda class of graded modules is zero", "extension"},
             {"descend", "Graded split descent of a Z0 extension", "extension"}}) {
        auto* c = command(name, help);
        with_file(c);
        c->add_option(what, a)->required();
    }
    for (const std::string name : {"gplus", "gminus"}) {
        auto* c = command(name, name == "gplus" ? "G+ of a graded module" : "G- of a graded module");
        with_file(c);
        c->add_option("module", a)->required();
        c->add_option("--ring", ring, "CDG-ring to use (default: the only one over the module's algebra)");
    }
    auto* c_twist = command("twist", "Twist an object by a Maurer-Cartan cochain");
    with_file(c_twist);
    c_twist->add_option("object", a)->required();
    c_twist->add_option("cochain", b)->required();
    for (const std::string name : {"tot", "witness"}) {
        auto* c = command(name, name == "tot" ? "Totalization of a Z0 complex" : "Acyclicity witness of Tot(exact)");
        with_file(c);
        c->add_option("extension", a)->required();
        c->add_option("--start", start, "Degree of the first term");
    }
    for (const std::string name : {"resolve-proj", "resolve-inj"}) {
        auto* c = command(name, name == "resolve-proj" ? "Graded-projective replacement" : "Graded-injective replacement");
        with_file(c);
        c->add_option("object", a)->required();
        c->add_option("--length", length, "Largest allowed length");
    }
    auto* c_app = command("approach", "Approach an object through Tot of a short exact sequence");
    with_file(c_app);
    c_app->add_option("object", a)->required();
    c_app->add_option("ses", b)->required();
    c_app->add_option("--start", start, "Degree of the first term");
    auto* c_demo = command("demo", "Reproduce a counterexample");
    c_demo->add_option("name", a)->required()->check(CLI::IsMember(demo_names()));
    auto* c_self = command("selftest", "Run every operation check and invariant suite");
    c_self->add_option("files", files, "Extra fixture documents to check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Run r;
    for (auto& [name, c] : sub)
        if (c->parsed()) r.command = name;
    Loaded l;
    try {
        if (!g.window.empty() && g.window[0] > g.window[1]) throw Usage("--window needs lo <= hi");
        const std::string& cmd = r.command;
        const bool needs_file = cmd != "demo" && cmd != "selftest";
        if (needs_file) l = load(file, g);
        if (cmd == "check")
            cmd_check(r, l);
        else if (cmd == "hom")
            cmd_hom(r, l, a, b);
        else if (cmd == "cohomology")
            cmd_cohomology(r, l, a, b);
        else if (cmd == "nullhomotopy")
            cmd_nullhomotopy(r, l, a, g);
        else if (cmd == "bec")
            cmd_bec(r, l, a);
        else if (cmd == "phi")
            cmd_phi(r, l, a, g);
        else if (cmd == "psi")
            cmd_psi(r, l, a, g);
        else if (cmd == "xi")
            cmd_xi(r, l, a, g);
        else if (cmd == "becbec")
            cmd_becbec(r, l, a);
        else if (cmd == "gplus" || cmd == "gminus")
            cmd_g(r, l, a, ring, cmd == "gplus", g);
        else if (cmd == "twist")
            cmd_twist(r, l, a, b, g);
        else if (cmd == "cone")
            cmd_cone(r, l, a, g);
        else if (cmd == "tot")
            cmd_tot(r, l, a, start, g);
        else if (cmd == "resolve-proj" || cmd == "resolve-inj")
            cmd_resolve(r, l, a, length, cmd == "resolve-proj", g);
        else if (cmd == "witness")
            cmd_witness(r, l, a, start, g);
        else if (cmd == "verify-witness")
            cmd_verify_witness(r, l, a);
        else if (cmd == "approach")
            cmd_approach(r, l, a, b, start, g);
        else if (cmd == "yoneda-split")
            cmd_yoneda(r, l, a);
        else if (cmd == "descend")
            cmd_descend(r, l, a, g);
        else if (cmd == "demo")
            cmd_demo(r, a, g);
        else if (cmd == "selftest")
            cmd_selftest(r, files, g);
        emit(r, g, l.doc);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DegreeError& e) {
        std::cerr << "input error: " << e.what() << " (widen --window)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return r.pass ? 0 : 1;
}
