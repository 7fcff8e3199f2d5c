#pragma once

#include "logchern/groebner.hpp"
#include "logchern/parser.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace logchern {

// Ring presentation: generators with degrees, a monomial order, and a
// relation ideal. Text format, one directive per line:
//
//   # comment
//   var <name> deg <k>
//   order <grevlex|grlex> <name> > <name> > ...
//   rel <polynomial text>
//
// Variable precedence is the order-line sequence (highest first).
struct RingPresentation {
    RingPtr ring;
    std::vector<Polynomial> relations;

    std::string to_text() const {
        std::ostringstream os;
        for (const auto& v : ring->vars()) os << "var " << v.name << " deg " << v.degree << "\n";
        os << "order " << logchern::to_string(ring->order_kind());
        for (std::size_t i = 0; i < ring->size(); ++i)
            os << (i ? " > " : " ") << ring->var(i).name;
        os << "\n";
        for (const auto& r : relations) os << "rel " << r.to_string() << "\n";
        return os.str();
    }
};

inline RingPresentation parse_presentation(const std::string& text) {
    std::istringstream in(text);
    std::vector<Variable> vars;
    std::optional<OrderKind> kind;
    std::vector<std::string> precedence;
    std::vector<std::string> relation_texts;
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("presentation line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "var") {
            std::string name, kw;
            int deg = 0;
            if (!(ls >> name >> kw >> deg) || kw != "deg") fail("expected 'var <name> deg <k>'");
            vars.push_back({name, deg});
        } else if (head == "order") {
            std::string kw;
            if (!(ls >> kw)) fail("expected order kind");
            if (kw == "grevlex") kind = OrderKind::GrevLex;
            else if (kw == "grlex") kind = OrderKind::GrLex;
            else fail("unknown order kind '" + kw + "'");
            std::string tok;
            while (ls >> tok)
                if (tok != ">") precedence.push_back(tok);
        } else if (head == "rel") {
            std::string rest;
            std::getline(ls, rest);
            relation_texts.push_back(rest);
        } else {
            fail("unknown directive '" + head + "'");
        }
    }
    if (vars.empty()) throw std::invalid_argument("presentation declares no variables");
    if (!precedence.empty()) {
        if (precedence.size() != vars.size())
            throw std::invalid_argument("order line must list every variable");
        std::vector<Variable> ordered;
        for (const auto& name : precedence) {
            auto it = std::find_if(vars.begin(), vars.end(),
                                   [&](const Variable& v) { return v.name == name; });
            if (it == vars.end())
                throw std::invalid_argument("order references unknown variable '" + name + "'");
            ordered.push_back(*it);
        }
        vars = std::move(ordered);
    }
    RingPresentation pres;
    pres.ring = make_ring(vars, kind.value_or(OrderKind::GrevLex));
    for (const auto& t : relation_texts) pres.relations.push_back(parse(t, pres.ring));
    return pres;
}

inline RingPresentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open presentation file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

// A presentation together with its completed Groebner basis; normal forms
// here are the canonical representatives of quotient-ring classes.
class QuotientRing {
public:
    explicit QuotientRing(RingPresentation pres)
        : pres_(std::move(pres)), basis_(buchberger(pres_.relations)) {}

    const RingPtr& ring() const { return pres_.ring; }
    const RingPresentation& presentation() const { return pres_; }
    const IdealBasis& basis() const { return basis_; }

    Polynomial nf(const Polynomial& p) const { return normal_form(p, basis_); }
    bool contains(const Polynomial& p) const { return is_member(p, basis_); }

    Polynomial parse_nf(const std::string& text) const { return nf(parse(text, pres_.ring)); }

private:
    RingPresentation pres_;
    IdealBasis basis_;
};

} // namespace logchern
