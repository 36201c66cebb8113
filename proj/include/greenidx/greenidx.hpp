#ifndef GREENIDX_GREENIDX_HPP_
#define GREENIDX_GREENIDX_HPP_

#include "error.hpp"
#include "semigroup.hpp"
#include "relgreen.hpp"
#include "words.hpp"
#include "rewrite.hpp"
#include "schutz.hpp"
#include "present.hpp"
#include "word_problem.hpp"
#include "automata.hpp"
#include "automatic.hpp"
#include "growth.hpp"

#endif  // GREENIDX_GREENIDX_HPP_
