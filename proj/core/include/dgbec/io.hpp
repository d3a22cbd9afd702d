#pragma once

#include "dgbec/resolve.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dgbec {

class InputError : public std::runtime_error {
public:
    InputError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Line-oriented block tree: "begin <kind> [<name>] [args...]" ... "end".
struct TextLine {
    std::size_t number = 0;
    std::vector<std::string> tokens;
};
struct Block;
struct BlockItem {
    TextLine line;
    std::vector<Block> block;  // empty for a plain line, one entry for a nested block
    bool is_block() const { return !block.empty(); }
};
struct Block {
    std::size_t line = 0;
    std::string kind, name;
    std::vector<std::string> args;
    std::vector<BlockItem> items;

    void add(std::vector<std::string> tokens);
    void add(Block b);
    void add_matrix(const std::string& label, const Matrix& m);
    void add_degrees(const std::vector<int>& d);
};
struct Document {
    std::vector<Block> blocks;
};

Document parse_document(const std::string& text);
std::string print_document(const Document& doc);

// Z0-complex or Yoneda extension read from an extension block.
struct ExtensionDef {
    std::vector<std::string> terms;
    bool graded = true;
    NExtension graded_ext;
    ExactComplex complex;
};
struct MapDef {
    std::string source, target;
    int degree = 0;
    Matrix m;
};
struct ObjectRef {
    DgObject object;
    std::string over;  // cdg-ring name, or algebra name for complexes
};

// Typed view of a document; names are unique across kinds.
struct Store {
    Field field = Field::prime(7);
    std::optional<GradingDatum> datum;
    std::map<std::string, AlgebraPtr> algebras;
    std::map<std::string, GradedModule> modules;
    std::map<std::string, std::string> module_over;
    std::map<std::string, RingPtr> rings;
    std::map<std::string, std::string> ring_over;
    std::map<std::string, ObjectRef> objects;
    std::map<std::string, BecObject> becs;
    std::map<std::string, std::string> bec_over;
    std::map<std::string, MapDef> maps;
    std::map<std::string, ExtensionDef> extensions;
    std::map<std::string, AcyclicityWitness> witnesses;
    std::map<std::string, std::string> witness_over;
    std::vector<std::pair<std::string, std::string>> order;  // (kind, name)

    // dg_ring over an algebra, shared by every complex over it.
    RingPtr complex_ring(const std::string& algebra);
    const DgObject& object(const std::string& name, std::size_t line = 0) const;
    const GradedModule& module(const std::string& name, std::size_t line = 0) const;
    const MapDef& map(const std::string& name, std::size_t line = 0) const;
    bool defines(const std::string& name) const;

private:
    std::map<std::string, RingPtr> complex_rings_;
};

struct ElaborateOptions {
    std::optional<Field> field;
    std::optional<std::pair<int, int>> window;
};
Store elaborate(const Document& doc, const ElaborateOptions& opt = {});
Store load_store(const std::string& text, const ElaborateOptions& opt = {});

// Canonical blocks for typed values.
Block datum_block(const GradingDatum& d, const Field& f);
Block algebra_block(const std::string& name, const GradedAlgebra& a);
Block module_block(const std::string& name, const std::string& over, const GradedModule& m);
Block ring_block(const std::string& name, const std::string& over, const CdgRing& r);
Block object_block(const std::string& name, const std::string& over, const DgObject& x);
Block bec_block(const std::string& name, const std::string& over, const BecObject& x);
Block map_block(const std::string& name, const MapDef& f);
Block witness_block(const std::string& name, const std::string& over, const AcyclicityWitness& w);

}  // namespace dgbec
