// clintag -- rule-based POS tagger for clinical English
#pragma once

#include "corpusio.hpp"
#include "errors.hpp"
#include "eval.hpp"
#include "lexicon.hpp"
#include "pipeline.hpp"
#include "rules.hpp"
#include "stemmer.hpp"
#include "tagset.hpp"
#include "tokenizer.hpp"
