#include "dgbec/io.hpp"

#include <sstream>

namespace dgbec {

InputError::InputError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
{
}

void Block::add(std::vector<std::string> tokens) { items.push_back({{0, std::move(tokens)}, {}}); }

void Block::add(Block b) { items.push_back({{}, {std::move(b)}}); }

void Block::add_matrix(const std::string& label, const Matrix& m)
{
    add({label, std::to_string(m.rows()), std::to_string(m.cols())});
    if (m.cols() == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        add(std::move(row));
    }
}

void Block::add_degrees(const std::vector<int>& d)
{
    std::vector<std::string> t{"degrees", "["};
    for (int x : d) t.push_back(std::to_string(x));
    t.push_back("]");
    add(std::move(t));
}

namespace {

std::vector<std::string> tokenize(const std::string& line)
{
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
    };
    for (char c : line) {
        if (c == '#') break;
        if (c == '[' || c == ']') {
            flush();
            out.push_back(std::string(1, c));
        } else if (c == ' ' || c == '\t' || c == '\r') {
            flush();
        } else {
            cur += c;
        }
    }
    flush();
    return out;
}

std::string join(const std::vector<std::string>& t)
{
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i > 0 && t[i - 1] != "[" && t[i] != "]") s += ' ';
        s += t[i];
    }
    return s;
}

void print_block(std::ostringstream& os, const Block& b, int depth)
{
    const std::string ind(2 * depth, ' ');
    std::vector<std::string> head{"begin", b.kind};
    if (!b.name.empty()) head.push_back(b.name);
    head.insert(head.end(), b.args.begin(), b.args.end());
    os << ind << join(head) << '\n';
    for (const auto& it : b.items) {
        if (it.is_block())
            print_block(os, it.block[0], depth + 1);
        else
            os << ind << "  " << join(it.line.tokens) << '\n';
    }
    os << ind << "end\n";
}

}  // namespace

Document parse_document(const std::string& text)
{
    Document doc;
    std::vector<Block> stack;
    std::istringstream is(text);
    std::string raw;
    std::size_t n = 0;
    while (std::getline(is, raw)) {
        ++n;
        auto t = tokenize(raw);
        if (t.empty()) continue;
        if (t[0] == "begin") {
            if (t.size() < 2) throw InputError(n, "begin without a kind");
            Block b;
            b.line = n;
            b.kind = t[1];
            if (t.size() > 2) b.name = t[2];
            b.args.assign(t.begin() + std::min<std::size_t>(3, t.size()), t.end());
            stack.push_back(std::move(b));
        } else if (t[0] == "end") {
            if (t.size() != 1) throw InputError(n, "unexpected tokens after end");
            if (stack.empty()) throw InputError(n, "end without begin");
            Block b = std::move(stack.back());
            stack.pop_back();
            if (stack.empty())
                doc.blocks.push_back(std::move(b));
            else
                stack.back().items.push_back({{n, {}}, {std::move(b)}});
        } else {
            if (stack.empty()) throw InputError(n, "content outside a block");
            stack.back().items.push_back({{n, std::move(t)}, {}});
        }
    }
    if (!stack.empty()) throw InputError(stack.back().line, "block '" + stack.back().kind + "' not closed");
    return doc;
}

std::string print_document(const Document& doc)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < doc.blocks.size(); ++i) {
        if (i) os << '\n';
        print_block(os, doc.blocks[i], 0);
    }
    return os.str();
}

RingPtr Store::complex_ring(const std::string& algebra)
{
    auto it = complex_rings_.find(algebra);
    if (it != complex_rings_.end()) return it->second;
    auto a = algebras.find(algebra);
    if (a == algebras.end()) throw InputError(0, "unknown algebra '" + algebra + "'");
    RingPtr r = dg_ring(a->second);
    complex_rings_[algebra] = r;
    return r;
}

bool Store::defines(const std::string& name) const
{
    return algebras.count(name) || modules.count(name) || rings.count(name) || objects.count(name) ||
           becs.count(name) || maps.count(name) || extensions.count(name) || witnesses.count(name);
}

const DgObject& Store::object(const std::string& name, std::size_t line) const
{
    auto it = objects.find(name);
    if (it == objects.end()) throw InputError(line, "'" + name + "' is not a defined object");
    return it->second.object;
}

const GradedModule& Store::module(const std::string& name, std::size_t line) const
{
    auto it = modules.find(name);
    if (it == modules.end()) throw InputError(line, "'" + name + "' is not a defined module");
    return it->second;
}

const MapDef& Store::map(const std::string& name, std::size_t line) const
{
    auto it = maps.find(name);
    if (it == maps.end()) throw InputError(line, "'" + name + "' is not a defined map");
    return it->second;
}

namespace {

// Sequential reader over the items of one block.
class Reader {
public:
    Reader(const Block& b, const Field& f) : b_(b), f_(f) {}

    bool done() const { return pos_ >= b_.items.size(); }
    std::size_t line() const { return done() ? b_.line : item().line.number; }
    bool next_is_block(const std::string& kind) const
    {
        return !done() && item().is_block() && item().block[0].kind == kind;
    }
    bool next_is(const std::string& key) const
    {
        return !done() && !item().is_block() && item().line.tokens[0] == key;
    }
    const Block& block(const std::string& kind)
    {
        if (!next_is_block(kind)) fail("expected a nested '" + kind + "' block");
        return b_.items[pos_++].block[0];
    }
    std::vector<std::string> keyed(const std::string& key, std::size_t nargs)
    {
        if (!next_is(key)) fail("expected '" + key + "'");
        const auto& t = item().line.tokens;
        if (t.size() != nargs + 1) fail("'" + key + "' takes " + std::to_string(nargs) + " argument(s)");
        ++pos_;
        return {t.begin() + 1, t.end()};
    }
    std::string word(const std::string& key) { return keyed(key, 1)[0]; }
    std::size_t keyed_size(const std::string& key) const
    {
        if (!next_is(key)) fail("expected '" + key + "'");
        return item().line.tokens.size() - 1;
    }
    std::vector<std::vector<int>> int_table(const std::string& key, std::size_t rows, std::size_t cols)
    {
        auto a = keyed(key, 2);
        if (to_size(a[0]) != rows || to_size(a[1]) != cols)
            fail("'" + key + "' must be " + std::to_string(rows) + " x " + std::to_string(cols));
        std::vector<std::vector<int>> t;
        for (std::size_t i = 0; i < rows; ++i) {
            if (done() || item().is_block()) fail("table '" + key + "' has too few rows");
            const auto& tk = item().line.tokens;
            if (tk.size() != cols) fail("table row has " + std::to_string(tk.size()) + " entries");
            t.emplace_back();
            for (const auto& x : tk) t.back().push_back(to_int(x));
            ++pos_;
        }
        return t;
    }
    int integer(const std::string& key) { return to_int(keyed(key, 1)[0]); }
    std::vector<int> degrees()
    {
        if (!next_is("degrees")) fail("expected 'degrees'");
        const auto& t = item().line.tokens;
        if (t.size() < 3 || t[1] != "[" || t.back() != "]") fail("degrees must be bracketed integers");
        std::vector<int> d;
        for (std::size_t i = 2; i + 1 < t.size(); ++i) d.push_back(to_int(t[i]));
        ++pos_;
        return d;
    }
    Matrix matrix(const std::string& key, std::optional<std::size_t> rows = {}, std::optional<std::size_t> cols = {})
    {
        auto a = keyed(key, 2);
        const std::size_t r = to_size(a[0]), c = to_size(a[1]);
        if ((rows && *rows != r) || (cols && *cols != c))
            fail("'" + key + "' must be " + std::to_string(rows.value_or(r)) + " x " + std::to_string(cols.value_or(c)));
        Matrix m(f_, r, c);
        if (c == 0) return m;
        for (std::size_t i = 0; i < r; ++i) {
            if (done() || item().is_block()) fail("matrix '" + key + "' has too few rows");
            const auto& t = item().line.tokens;
            if (t.size() != c) fail("matrix row has " + std::to_string(t.size()) + " entries, expected " + std::to_string(c));
            for (std::size_t j = 0; j < c; ++j) {
                try {
                    m.set(i, j, Scalar::parse(f_, t[j]));
                } catch (const std::exception& e) {
                    fail("malformed scalar '" + t[j] + "'");
                }
            }
            ++pos_;
        }
        return m;
    }
    void finish()
    {
        if (!done()) fail("unexpected content in '" + b_.kind + "' block");
    }
    [[noreturn]] void fail(const std::string& what) const { throw InputError(line(), what); }
    int to_int(const std::string& s) const
    {
        try {
            std::size_t k = 0;
            long long v = std::stoll(s, &k);
            if (k != s.size() || v < -1000000 || v > 1000000) throw std::invalid_argument(s);
            return static_cast<int>(v);
        } catch (const std::exception&) {
            fail("malformed integer '" + s + "'");
        }
    }
    std::size_t to_size(const std::string& s) const
    {
        int v = to_int(s);
        if (v < 0) fail("negative size");
        return static_cast<std::size_t>(v);
    }

private:
    const BlockItem& item() const { return b_.items[pos_]; }
    const Block& b_;
    Field f_;
    std::size_t pos_ = 0;
};

std::string over_of(const Block& b, const std::string& inherited = "")
{
    if (b.args.size() == 2 && b.args[0] == "over") return b.args[1];
    if (b.args.empty() && !inherited.empty()) return inherited;
    throw InputError(b.line, "'" + b.kind + "' needs 'over <name>'");
}

class Elaborator {
public:
    Elaborator(Store& s) : s_(s) {}

    void datum(const Block& b, const ElaborateOptions& opt)
    {
        if (s_.datum) throw InputError(b.line, "duplicate datum block");
        Reader r(b, Field::prime(2));
        if (r.next_is("field")) {
            const std::string fs = r.word("field");
            if (fs == "Q")
                s_.field = Field::rationals();
            else {
                try {
                    s_.field = Field::prime(static_cast<std::uint32_t>(r.to_size(fs)));
                } catch (const FieldError& e) {
                    r.fail(e.what());
                }
            }
        }
        if (opt.field) s_.field = *opt.field;
        if (r.next_is("group") && r.keyed_size("group") == 1) {
            if (r.word("group") != "Z") r.fail("group must be 'Z' or 'Z/2p <p>'");
            auto w = r.keyed("window", 2);
            int lo = r.to_int(w[0]), hi = r.to_int(w[1]);
            if (opt.window) std::tie(lo, hi) = *opt.window;
            if (lo > hi) r.fail("empty window");
            s_.datum = GradingDatum::integers(lo, hi);
        } else {
            auto g = r.keyed("group", 2);
            if (g[0] != "Z/2p") r.fail("group must be 'Z' or 'Z/2p <p>'");
            const int p = r.to_int(g[1]);
            if (p < 1) r.fail("Z/2p needs p >= 1");
            if (r.next_is("sigma")) {
                const std::size_t n = static_cast<std::size_t>(2 * p);
                std::vector<std::vector<int>> table;
                for (const auto& row : r.int_table("sigma", n, n)) {
                    table.emplace_back();
                    for (int v : row) {
                        if (v != 0 && v != 1) r.fail("sigma entries are 0 or 1");
                        table.back().push_back(v);
                    }
                }
                s_.datum = GradingDatum::cyclic(p, table);
            } else {
                s_.datum = GradingDatum::cyclic(p);
            }
        }
        r.finish();
    }

    AlgebraPtr algebra_ref(const std::string& name, std::size_t line)
    {
        auto it = s_.algebras.find(name);
        if (it == s_.algebras.end()) throw InputError(line, "'" + name + "' is not a defined algebra");
        return it->second;
    }
    RingPtr ring_ref(const std::string& name, std::size_t line)
    {
        auto it = s_.rings.find(name);
        if (it == s_.rings.end()) throw InputError(line, "'" + name + "' is not a defined cdg-ring");
        return it->second;
    }

    void check_degrees(const std::vector<int>& d, std::size_t line)
    {
        for (int x : d)
            if (!s_.datum->representable(x))
                throw InputError(line, "degree " + std::to_string(x) + " outside " + s_.datum->describe());
    }

    void algebra(const Block& b)
    {
        Reader r(b, s_.field);
        auto deg = r.degrees();
        check_degrees(deg, b.line);
        const std::size_t n = deg.size();
        Matrix unit = r.matrix("unit", n, 1);
        std::vector<Matrix> left;
        for (std::size_t i = 0; i < n; ++i) left.push_back(r.matrix("left", n, n));
        r.finish();
        s_.algebras[b.name] = std::make_shared<const GradedAlgebra>(*s_.datum, s_.field, deg, left, unit);
    }

    GradedModule module_body(Reader& r, const AlgebraPtr& alg, std::size_t line)
    {
        GradedModule m;
        m.alg = alg;
        m.degrees = r.degrees();
        check_degrees(m.degrees, line);
        for (std::size_t i = 0; i < alg->dim(); ++i) m.act.push_back(r.matrix("act", m.dim(), m.dim()));
        return m;
    }

    void module(const Block& b)
    {
        const std::string over = over_of(b);
        Reader r(b, s_.field);
        GradedModule m = module_body(r, algebra_ref(over, b.line), b.line);
        r.finish();
        s_.modules[b.name] = std::move(m);
        s_.module_over[b.name] = over;
    }

    void ring(const Block& b)
    {
        const std::string over = over_of(b);
        AlgebraPtr alg = algebra_ref(over, b.line);
        Reader r(b, s_.field);
        Matrix d = r.matrix("d", alg->dim(), alg->dim());
        Matrix h = r.matrix("h", alg->dim(), 1);
        r.finish();
        s_.rings[b.name] = make_ring(alg, d, h);
        s_.ring_over[b.name] = over;
    }

    void cdg_module(const Block& b)
    {
        const std::string over = over_of(b);
        RingPtr ring = ring_ref(over, b.line);
        Reader r(b, s_.field);
        const std::size_t ln = r.line();
        const std::string mn = r.word("module");
        const GradedModule& m = s_.module(mn, ln);
        if (!(*m.alg == *ring->alg)) throw InputError(ln, "module '" + mn + "' is not over the ring's algebra");
        GradedModule base = m;
        base.alg = ring->alg;
        Matrix d = r.matrix("d", m.dim(), m.dim());
        r.finish();
        s_.objects[b.name] = {cdg_object({ring, base, d}), over};
    }

    void complex(const Block& b)
    {
        const std::string over = over_of(b);
        algebra_ref(over, b.line);
        RingPtr ring = s_.complex_ring(over);
        Reader r(b, s_.field);
        const int lo = r.integer("lo");
        std::vector<GradedModule> terms;
        while (r.next_is("term")) {
            const std::size_t ln = r.line();
            const std::string mn = r.word("term");
            GradedModule m = s_.module(mn, ln);
            if (s_.module_over.at(mn) != over) throw InputError(ln, "term '" + mn + "' is not over '" + over + "'");
            m.alg = ring->alg;
            terms.push_back(std::move(m));
        }
        std::vector<Matrix> diffs;
        for (std::size_t i = 0; i + 1 < terms.size(); ++i)
            diffs.push_back(r.matrix("map", terms[i + 1].dim(), terms[i].dim()));
        r.finish();
        try {
            s_.objects[b.name] = {complex_from_terms(ring, lo, terms, diffs), over};
        } catch (const std::exception& e) {
            throw InputError(b.line, e.what());
        }
    }

    DgObject object_body(const Block& b, const std::string& over)
    {
        Reader r(b, s_.field);
        const std::string inst = r.word("instance");
        RingPtr ring;
        if (inst == "cdg")
            ring = ring_ref(over, b.line);
        else if (inst == "complex") {
            algebra_ref(over, b.line);
            ring = s_.complex_ring(over);
        } else
            r.fail("instance must be cdg or complex");
        GradedModule m = module_body(r, ring->alg, b.line);
        Matrix d = r.matrix("d", m.dim(), m.dim());
        r.finish();
        CdgModule cm{ring, m, d};
        try {
            return inst == "cdg" ? cdg_object(cm) : complex_object(cm);
        } catch (const std::exception& e) {
            throw InputError(b.line, e.what());
        }
    }

    void object(const Block& b)
    {
        const std::string over = over_of(b);
        s_.objects[b.name] = {object_body(b, over), over};
    }

    void bec(const Block& b)
    {
        const std::string over = over_of(b);
        Reader r(b, s_.field);
        DgObject base;
        if (r.next_is("object")) {
            const std::size_t ln = r.line();
            base = s_.object(r.word("object"), ln);
        } else {
            base = object_body(r.block("object"), over);
        }
        Matrix sigma = r.matrix("sigma", base.dim(), base.dim());
        r.finish();
        s_.becs[b.name] = {base, sigma};
        s_.bec_over[b.name] = over;
    }

    std::size_t dim_of(const std::string& name, std::size_t line) const
    {
        if (s_.modules.count(name)) return s_.modules.at(name).dim();
        if (s_.objects.count(name)) return s_.objects.at(name).object.dim();
        if (s_.becs.count(name)) return s_.becs.at(name).base.dim();
        throw InputError(line, "'" + name + "' is not a module, object or bec object");
    }

    void map(const Block& b)
    {
        Reader r(b, s_.field);
        MapDef f;
        std::size_t ln = r.line();
        f.source = r.word("source");
        const std::size_t ns = dim_of(f.source, ln);
        ln = r.line();
        f.target = r.word("target");
        const std::size_t nt = dim_of(f.target, ln);
        f.degree = r.integer("degree");
        f.m = r.matrix("matrix", nt, ns);
        r.finish();
        s_.maps[b.name] = std::move(f);
    }

    void extension(const Block& b)
    {
        Reader r(b, s_.field);
        ExtensionDef e;
        std::vector<std::size_t> dims;
        std::size_t mods = 0, objs = 0;
        while (r.next_is("term")) {
            const std::size_t ln = r.line();
            e.terms.push_back(r.word("term"));
            dims.push_back(dim_of(e.terms.back(), ln));
            if (s_.modules.count(e.terms.back())) ++mods;
            if (s_.objects.count(e.terms.back())) ++objs;
        }
        if (e.terms.empty()) r.fail("extension needs terms");
        if (mods && objs) r.fail("extension terms must all be modules or all be objects");
        std::vector<Matrix> maps;
        for (std::size_t i = 0; i + 1 < dims.size(); ++i) maps.push_back(r.matrix("map", dims[i + 1], dims[i]));
        r.finish();
        e.graded = objs == 0;
        for (const auto& t : e.terms) {
            if (e.graded)
                e.graded_ext.terms.push_back(s_.modules.at(t));
            else
                e.complex.terms.push_back(s_.objects.at(t).object);
        }
        (e.graded ? e.graded_ext.maps : e.complex.maps) = maps;
        s_.extensions[b.name] = std::move(e);
    }

    AcyclicityWitness node(const Block& b, const std::string& over)
    {
        Reader r(b, s_.field);
        const std::string kind = r.word("kind");
        AcyclicityWitness w;
        static const std::map<std::string, WitnessKind> kinds{
            {"zero", WitnessKind::Zero},   {"leaf", WitnessKind::Leaf},       {"shift", WitnessKind::Shift},
            {"cone", WitnessKind::Cone},   {"summand", WitnessKind::Summand}, {"equivalence", WitnessKind::HomotopyEquivalence}};
        auto k = kinds.find(kind);
        if (k == kinds.end()) r.fail("unknown witness kind '" + kind + "'");
        w.kind = k->second;
        if (w.kind == WitnessKind::Leaf) w.start = r.integer("start");
        if (w.kind == WitnessKind::Shift) w.shift = r.integer("shift");
        auto obj = [&](const char* role) {
            const Block& ob = r.block("object");
            if (ob.name != role) throw InputError(ob.line, std::string("expected object '") + role + "'");
            return object_body(ob, over_of(ob, over));
        };
        w.object = obj("self");
        const std::size_t n = w.object.dim();
        switch (w.kind) {
        case WitnessKind::Leaf:
            w.ses.u = obj("u");
            w.ses.v = obj("v");
            w.ses.w = obj("w");
            w.ses.j = r.matrix("j", w.ses.v.dim(), w.ses.u.dim());
            w.ses.k = r.matrix("k", w.ses.w.dim(), w.ses.v.dim());
            break;
        case WitnessKind::Cone:
            w.map = r.matrix("map");
            break;
        case WitnessKind::Summand:
            w.incl = r.matrix("incl");
            w.proj = r.matrix("proj");
            w.homotopy = r.matrix("homotopy", n, n);
            break;
        case WitnessKind::HomotopyEquivalence:
            w.u = r.matrix("u");
            w.v = r.matrix("v");
            w.h1 = r.matrix("h1", n, n);
            w.h2 = r.matrix("h2");
            break;
        default:
            break;
        }
        while (r.next_is_block("node")) w.children.push_back(node(r.block("node"), over));
        r.finish();
        return w;
    }

    void witness(const Block& b)
    {
        const std::string over = over_of(b);
        Reader r(b, s_.field);
        AcyclicityWitness w = node(r.block("node"), over);
        r.finish();
        s_.witnesses[b.name] = std::move(w);
        s_.witness_over[b.name] = over;
    }

private:
    Store& s_;
};

}  // namespace

Store elaborate(const Document& doc, const ElaborateOptions& opt)
{
    Store s;
    if (opt.field) s.field = *opt.field;
    Elaborator el(s);
    for (const Block& b : doc.blocks) {
        if (b.kind == "datum") {
            el.datum(b, opt);
            continue;
        }
        if (!s.datum) throw InputError(b.line, "the datum block must come first");
        if (b.name.empty()) throw InputError(b.line, "'" + b.kind + "' needs a name");
        if (s.defines(b.name)) throw InputError(b.line, "'" + b.name + "' defined twice");
        if (b.kind == "algebra")
            el.algebra(b);
        else if (b.kind == "module")
            el.module(b);
        else if (b.kind == "cdg-ring")
            el.ring(b);
        else if (b.kind == "cdg-module")
            el.cdg_module(b);
        else if (b.kind == "complex")
            el.complex(b);
        else if (b.kind == "object")
            el.object(b);
        else if (b.kind == "bec")
            el.bec(b);
        else if (b.kind == "map")
            el.map(b);
        else if (b.kind == "extension")
            el.extension(b);
        else if (b.kind == "witness")
            el.witness(b);
        else
            throw InputError(b.line, "unknown block kind '" + b.kind + "'");
        s.order.emplace_back(b.kind, b.name);
    }
    return s;
}

Store load_store(const std::string& text, const ElaborateOptions& opt) { return elaborate(parse_document(text), opt); }

}  // namespace dgbec

namespace dgbec {

namespace {

Block named(const std::string& kind, const std::string& name, std::vector<std::string> args = {})
{
    Block b;
    b.kind = kind;
    b.name = name;
    b.args = std::move(args);
    return b;
}

std::vector<std::string> over_args(const std::string& over)
{
    if (over.empty()) return {};
    return {"over", over};
}

void add_module_body(Block& b, const GradedModule& m)
{
    b.add_degrees(m.degrees);
    for (const Matrix& a : m.act) b.add_matrix("act", a);
}

}  // namespace

Block datum_block(const GradingDatum& d, const Field& f)
{
    Block b = named("datum", "");
    b.add({"field", f.is_rational() ? "Q" : std::to_string(f.characteristic())});
    if (d.is_integer()) {
        b.add({"group", "Z"});
        b.add({"window", std::to_string(d.lo()), std::to_string(d.hi())});
    } else {
        b.add({"group", "Z/2p", std::to_string(d.half_order())});
        const std::size_t n = static_cast<std::size_t>(d.order());
        b.add({"sigma", std::to_string(n), std::to_string(n)});
        for (const auto& row : d.sigma_table()) {
            std::vector<std::string> t;
            for (int v : row) t.push_back(std::to_string(v));
            b.add(std::move(t));
        }
    }
    return b;
}

Block algebra_block(const std::string& name, const GradedAlgebra& a)
{
    Block b = named("algebra", name);
    b.add_degrees(a.degrees());
    b.add_matrix("unit", a.unit());
    for (const Matrix& l : a.left()) b.add_matrix("left", l);
    return b;
}

Block module_block(const std::string& name, const std::string& over, const GradedModule& m)
{
    Block b = named("module", name, over_args(over));
    add_module_body(b, m);
    return b;
}

Block ring_block(const std::string& name, const std::string& over, const CdgRing& r)
{
    Block b = named("cdg-ring", name, over_args(over));
    b.add_matrix("d", r.d);
    b.add_matrix("h", r.h);
    return b;
}

Block object_block(const std::string& name, const std::string& over, const DgObject& x)
{
    Block b = named("object", name, over_args(over));
    b.add({"instance", x.instance == Instance::Complex ? "complex" : "cdg"});
    add_module_body(b, x.module.base);
    b.add_matrix("d", x.module.d);
    return b;
}

Block bec_block(const std::string& name, const std::string& over, const BecObject& x)
{
    Block b = named("bec", name, over_args(over));
    b.add(object_block("base", "", x.base));
    b.add_matrix("sigma", x.sigma);
    return b;
}

Block map_block(const std::string& name, const MapDef& f)
{
    Block b = named("map", name);
    b.add({"source", f.source});
    b.add({"target", f.target});
    b.add({"degree", std::to_string(f.degree)});
    b.add_matrix("matrix", f.m);
    return b;
}

namespace {

Block node_block(const AcyclicityWitness& w)
{
    Block b = named("node", "");
    b.add({"kind", witness_kind_name(w.kind)});
    if (w.kind == WitnessKind::Leaf) b.add({"start", std::to_string(w.start)});
    if (w.kind == WitnessKind::Shift) b.add({"shift", std::to_string(w.shift)});
    b.add(object_block("self", "", w.object));
    switch (w.kind) {
    case WitnessKind::Leaf:
        b.add(object_block("u", "", w.ses.u));
        b.add(object_block("v", "", w.ses.v));
        b.add(object_block("w", "", w.ses.w));
        b.add_matrix("j", w.ses.j);
        b.add_matrix("k", w.ses.k);
        break;
    case WitnessKind::Cone:
        b.add_matrix("map", w.map);
        break;
    case WitnessKind::Summand:
        b.add_matrix("incl", w.incl);
        b.add_matrix("proj", w.proj);
        b.add_matrix("homotopy", w.homotopy);
        break;
    case WitnessKind::HomotopyEquivalence:
        b.add_matrix("u", w.u);
        b.add_matrix("v", w.v);
        b.add_matrix("h1", w.h1);
        b.add_matrix("h2", w.h2);
        break;
    default:
        break;
    }
    for (const auto& c : w.children) b.add(node_block(c));
    return b;
}

}  // namespace

Block witness_block(const std::string& name, const std::string& over, const AcyclicityWitness& w)
{
    Block b = named("witness", name, over_args(over));
    b.add(node_block(w));
    return b;
}

}  // namespace dgbec
