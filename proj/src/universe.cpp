#include "loud/universe.hpp"

#include "loud/printer.hpp"

namespace loud {

Universe::Universe(const LoudProblem& p, uint64_t maxExamples)
    : problem_(&p),
      interp_(p.functions, p.config),
      exSpace_(example_domain(p)),
      hidSpace_(hidden_domain(p)) {
    if (exSpace_.size() > maxExamples || hidSpace_.size() > maxExamples)
        throw DomainTooLarge("domain of problem '" + p.name + "' is too large to enumerate");
    examples_.reserve(exSpace_.size());
    for (uint64_t i = 0; i < exSpace_.size(); ++i) examples_.push_back(exSpace_.decode(i));
    hidden_.reserve(hidSpace_.size());
    for (uint64_t i = 0; i < hidSpace_.size(); ++i) hidden_.push_back(hidSpace_.decode(i));
}

Bitset Universe::interp(const Expr& phi) const {
    Bitset out(examples_.size());
    for (uint64_t i = 0; i < examples_.size(); ++i) {
        try {
            if (eval_property(interp_, phi, examples_[i])) out.set(i);
        } catch (const PropertyFault& f) {
            throw PropertyFault(to_text(phi), example_text(i), f.reason());
        }
    }
    return out;
}

static std::string render(const ValuationSpace& s, const std::vector<Value>& vals) {
    std::string out = "(";
    for (size_t i = 0; i < vals.size(); ++i) {
        if (i) out += ", ";
        out += s.names()[i] + "=" + s.domain(i).show(vals[i]);
    }
    return out + ")";
}

std::string Universe::example_text(uint64_t e) const { return render(exSpace_, examples_[e]); }
std::string Universe::hidden_text(uint64_t h) const { return render(hidSpace_, hidden_[h]); }

}  // namespace loud
