#pragma once

#include <string>
#include <string_view>

#include "leafsub/tree.hpp"

namespace leafsub {

/**
 * Parses one tree in the supported Newick subset:
 *
 *   tree    := subtree ';'
 *   subtree := '(' subtree (',' subtree)* ')' | label?
 *   label   := [A-Za-z0-9_.-]+
 *
 * Whitespace between tokens is ignored. "x;" is a labeled single vertex and
 * ";" the unlabeled one. Branch lengths and internal labels raise
 * UnsupportedFeature; everything else malformed, including "()", raises
 * NewickSyntaxError with the byte offset.
 */
RootedTree parse_newick(std::string_view text);

/**
 * Serializes `t`. With `canonical` set, labels are dropped and children are
 * written in canonical-code order, so the output depends only on the
 * isomorphism class.
 */
std::string to_newick(const RootedTree& t, bool canonical = false);

}  // namespace leafsub
