#pragma once

#include "cdmat/errors.hpp"
#include "cdmat/gf2.hpp"
#include "cdmat/matroid.hpp"
#include "cdmat/isomorphism.hpp"
#include "cdmat/zoo.hpp"
#include "cdmat/predicates.hpp"
#include "cdmat/recognizer.hpp"
#include "cdmat/exminors.hpp"
#include "cdmat/io.hpp"
#include "cdmat/parallel.hpp"
#include "cdmat/corpus.hpp"
#include "cdmat/audit.hpp"
