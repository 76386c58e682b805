#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "specgap/group.hpp"
#include "specgap/measure.hpp"
#include "specgap/rep.hpp"
#include "specgap/word.hpp"

namespace specgap {

/// Flat key=value config file: '#' comments, optional [section] headers that
/// prefix keys as "section.key". Values keep inline whitespace.
std::map<std::string, std::string> load_config_file(const std::string& path);

/// Splits "a,b,c" (no escaping; used for radii lists etc).
std::vector<std::string> split(const std::string& text, char sep);

/// Group spec grammar:
///   cyclic:N | dihedral:N | symmetric:N | quaternion | table:r0;r1;...
/// and direct products joined with 'x', e.g. "cyclic:2xcyclic:3".
FiniteGroup parse_finite_group(const std::string& spec);

/// Word-group spec grammar: free:K | zd:D, products joined with 'x'.
WordGroup parse_word_group(const std::string& spec);
bool is_word_group_spec(const std::string& spec);

/// Measure spec over a finite group:
///   uniform:e0,e1,... | dirac:e | lazy:alpha:SPEC | literal "e0=p/q,e1=p/q,..."
ProbMeasure<int> parse_finite_measure(const std::string& spec, const FiniteGroup& G);

/// Measure spec over a word group:
///   uniform-gens | dirac:WORD | lazy:alpha:SPEC | literal "WORD=p/q,..."
/// Words use letters a,b,c,... with uppercase inverses ("e" = identity).
ProbMeasure<Word> parse_word_measure(const std::string& spec, const WordGroup& G);

/// Representation spec:
///   regular | character:K | mean-zero | tensor-conj:SPEC | direct-sum:SPEC|SPEC
UnitaryRep parse_rep(const std::string& spec, std::shared_ptr<const FiniteGroup> G);

/// Formats a double for CSV/tables: shortest round-trip form, '.' separator.
std::string format_double(double x);

}  // namespace specgap
