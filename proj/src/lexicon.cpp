#include "lexicon.hpp"

namespace tablescout::features::lexicon {

const std::unordered_set<std::string>& function_words() {
  static const std::unordered_set<std::string> words{
      "the", "a", "an", "this", "that", "these", "those", "some", "any",
      "each", "every", "either", "neither", "no", "all", "both", "such",
      "i", "you", "he", "she", "it", "we", "they", "me", "him", "her",
      "us", "them", "my", "your", "his", "its", "our", "their", "mine",
      "yours", "hers", "ours", "theirs", "myself", "yourself", "himself",
      "herself", "itself", "ourselves", "themselves", "who", "whom",
      "whose", "which", "what", "where", "when", "why", "how", "whether",
      "of", "in", "on", "at", "by", "for", "with", "about", "against",
      "between", "among", "into", "through", "during", "before", "after",
      "above", "below", "to", "from", "up", "down", "out", "off", "over",
      "under", "again", "further", "then", "once", "here", "there",
      "than", "via", "per", "within", "without", "upon", "onto", "across",
      "along", "around", "behind", "beside", "besides", "beyond",
      "despite", "except", "inside", "outside", "since", "toward",
      "towards", "until", "unless", "and", "or", "but", "nor", "so",
      "yet", "if", "because", "although", "though", "while", "as",
      "is", "am", "are", "was", "were", "be", "been", "being",
      "do", "does", "did", "done", "doing",
      "have", "has", "had", "having",
      "will", "would", "shall", "should", "can", "could", "may", "might",
      "must", "ought", "not", "n't", "also", "too", "very", "just",
      "only", "even", "still", "already", "ever", "never", "always",
      "often", "sometimes", "thus", "therefore", "however", "moreover",
      "furthermore", "hence", "otherwise", "instead", "meanwhile",
      "nevertheless", "nonetheless", "e.g", "i.e", "etc", "et", "al",
      "vs", "versus", "one", "two", "three", "four", "five", "six",
      "seven", "eight", "nine", "ten", "first", "second", "third",
      "many", "few", "several", "most", "more", "less", "least", "much",
      "own", "same", "other", "another", "itself."};
  return words;
}

const std::unordered_set<std::string>& nouns() {
  static const std::unordered_set<std::string> words{
      "accuracy", "algorithm", "analysis", "approach", "area", "article",
      "aspect", "author", "baseline", "behavior", "benchmark", "bias",
      "block", "body", "book", "boundary", "box", "candidate", "caption",
      "case", "category", "cell", "chapter", "character", "chart",
      "choice", "city", "class", "classifier", "cluster", "code",
      "collection", "column", "comparison", "component", "concept",
      "conclusion", "condition", "conference", "content", "context",
      "corpus", "count", "country", "criterion", "data", "database",
      "dataset", "decision", "definition", "design", "detail",
      "detection", "development", "device", "diagram", "dimension",
      "direction", "discussion", "distance", "distribution", "document",
      "domain", "edge", "effect", "effort", "element", "entity",
      "equation", "error", "evaluation", "evidence", "example",
      "experiment", "expression", "extraction", "factor", "feature",
      "field", "figure", "file", "font", "form", "format", "formula",
      "framework", "frequency", "function", "future", "gap", "goal",
      "government", "graph", "group", "header", "heuristic", "idea",
      "image", "impact", "implementation", "improvement", "index",
      "information", "input", "instance", "item", "journal", "kind",
      "knowledge", "label", "language", "layout", "learning", "length",
      "level", "library", "limit", "line", "list", "literature",
      "location", "machine", "margin", "matrix", "mean", "measure",
      "mechanism", "member", "method", "metric", "model", "module",
      "name", "network", "node", "noise", "notion", "number", "object",
      "observation", "order", "output", "overview", "page", "pair",
      "paper", "paradigm", "paragraph", "parameter", "part", "pattern",
      "percentage", "performance", "person", "phase", "phrase", "piece",
      "pipeline", "point", "position", "precision", "prediction",
      "presence", "probability", "problem", "procedure", "process",
      "program", "project", "property", "proportion", "purpose",
      "quality", "quantity", "question", "range", "rate", "ratio",
      "reason", "recall", "recognition", "record", "reference", "region",
      "relation", "report", "research", "result", "review", "row",
      "rule", "sample", "scale", "scheme", "science", "score", "search",
      "section", "segment", "sentence", "sequence", "series", "set",
      "shape", "side", "signal", "size", "software", "solution",
      "source", "space", "span", "speed", "state", "statistic",
      "strategy", "structure", "study", "style", "subject", "subset",
      "summary", "support", "survey", "system", "table", "tag",
      "tagger", "target", "task", "technique", "template", "term",
      "test", "text", "theory", "threshold", "time", "title", "token",
      "tool", "topic", "training", "tree", "trend", "type", "unit",
      "user", "value", "variable", "variety", "vector", "version",
      "view", "vocabulary", "way", "weight", "width", "word", "work",
      "world", "year"};
  return words;
}

const std::unordered_set<std::string>& verbs() {
  static const std::unordered_set<std::string> words{
      "achieve", "adapt", "add", "address", "adopt", "agree", "align",
      "allow", "analyze", "annotate", "appear", "apply", "approximate",
      "argue", "arrange", "assess", "assign", "assume", "attempt",
      "avoid", "become", "begin", "behave", "believe", "belong", "bring",
      "build", "calculate", "call", "capture", "carry", "change",
      "check", "choose", "claim", "classify", "collect", "combine",
      "come", "compare", "compute", "concern", "conclude", "conduct",
      "confirm", "consider", "consist", "construct", "contain",
      "contribute", "convert", "correspond", "cost", "cover", "create",
      "decide", "define", "demonstrate", "denote", "depend", "derive",
      "describe", "design", "detect", "determine", "develop", "differ",
      "discover", "discuss", "display", "divide", "download", "draw",
      "emit", "employ", "enable", "engage", "enhance", "establish",
      "estimate", "evaluate", "examine", "exceed", "exist", "expect",
      "explain", "explore", "express", "extend", "extract", "feed",
      "filter", "find", "fix", "focus", "follow", "form", "formulate",
      "gain", "generate", "get", "give", "go", "group", "grow", "handle",
      "happen", "help", "hold", "identify", "ignore", "illustrate",
      "implement", "imply", "improve", "include", "increase", "indicate",
      "infer", "integrate", "introduce", "investigate", "involve",
      "keep", "know", "label", "lead", "learn", "leave", "let",
      "leverage", "limit", "list", "locate", "look", "maintain", "make",
      "manage", "map", "mark", "match", "mean", "measure", "merge",
      "model", "move", "need", "normalize", "note", "observe", "obtain",
      "occur", "offer", "open", "operate", "outperform", "parse",
      "perform", "place", "predict", "prefer", "prepare", "present",
      "preserve", "process", "produce", "propose", "prove", "provide",
      "publish", "put", "rank", "reach", "read", "recognize", "reduce",
      "refer", "reflect", "regard", "relate", "release", "rely",
      "remain", "remove", "render", "replace", "report", "represent",
      "require", "resolve", "restrict", "result", "return", "reveal",
      "review", "run", "sample", "satisfy", "say", "score", "search",
      "see", "seem", "select", "separate", "set", "share", "show",
      "simplify", "solve", "sort", "specify", "split", "start", "state",
      "store", "study", "submit", "suffer", "suggest", "summarize",
      "supply", "support", "suppose", "take", "tend", "test", "think",
      "train", "transform", "treat", "try", "tune", "turn", "understand",
      "use", "validate", "vary", "verify", "vote", "want", "work",
      "write", "yield"};
  return words;
}

const std::unordered_set<std::string>& adjectives() {
  static const std::unordered_set<std::string> words{
      "able", "academic", "accurate", "available", "average", "balanced",
      "basic", "best", "better", "binary", "blank", "bottom", "broad",
      "canonical", "certain", "clear", "close", "common", "comparable",
      "complete", "complex", "conditional", "consecutive", "consistent",
      "continuous", "correct", "current", "deep", "dense", "dependent",
      "detailed", "different", "difficult", "discrete", "distant",
      "diverse", "dominant", "double", "early", "easy", "empirical",
      "empty", "entire", "equal", "equivalent", "exact", "explicit",
      "external", "false", "fast", "final", "fine", "flexible",
      "following", "free", "frequent", "full", "general", "good",
      "great", "hard", "high", "horizontal", "human", "important",
      "independent", "initial", "internal", "key", "large", "last",
      "late", "latest", "left", "likely", "linear", "linguistic",
      "little", "local", "logistic", "long", "low", "main", "major",
      "manual", "maximum", "mean", "minimal", "minimum", "minor",
      "multiple", "naive", "narrow", "natural", "necessary", "negative",
      "new", "next", "normal", "novel", "numeric", "numerical",
      "official", "old", "open", "optimal", "ordinary", "original",
      "overall", "particular", "poor", "popular", "portable", "positive",
      "possible", "practical", "present", "previous", "primary", "prior",
      "probable", "prominent", "proper", "public", "pure", "random",
      "rare", "raw", "real", "recent", "related", "relative", "relevant",
      "reliable", "rich", "right", "robust", "rough", "scientific",
      "semantic", "short", "significant", "similar", "simple", "single",
      "small", "sparse", "specific", "stable", "standard", "strict",
      "strong", "subsequent", "sufficient", "suitable", "supervised",
      "sure", "synthetic", "technical", "tedious", "textual", "top",
      "total", "traditional", "true", "typical", "uniform", "unique",
      "unknown", "unlabeled", "unsupervised", "upper", "useful",
      "valid", "various", "vertical", "visual", "weak", "wide"};
  return words;
}

const std::unordered_set<std::string>& adverbs() {
  static const std::unordered_set<std::string> words{
      "almost", "already", "also", "always", "anyway", "away", "back",
      "far", "fast", "forward", "hard", "here", "indeed", "instead",
      "later", "long", "maybe", "much", "near", "now", "nowadays",
      "often", "perhaps", "quite", "rather", "seldom", "somewhat",
      "soon", "still", "then", "there", "today", "together", "too",
      "twice", "well", "yet"};
  return words;
}

const std::unordered_set<std::string>& person_names() {
  static const std::unordered_set<std::string> words{
      "Adam", "Alan", "Albert", "Alice", "Andrew", "Anna", "Anne",
      "Anthony", "Barbara", "Benjamin", "Betty", "Brian", "Carol",
      "Charles", "Charlie", "Chris", "Christopher", "Daniel", "David",
      "Deborah", "Dennis", "Donald", "Donna", "Dorothy", "Douglas",
      "Edward", "Elizabeth", "Emily", "Emma", "Eric", "Frank", "George",
      "Hannah", "Harold", "Harry", "Helen", "Henry", "Jack", "Jacob",
      "James", "Jane", "Jason", "Jeffrey", "Jennifer", "Jessica", "John",
      "Jonathan", "Joseph", "Joshua", "Karen", "Katherine", "Kenneth",
      "Kevin", "Laura", "Linda", "Lisa", "Margaret", "Maria", "Mark",
      "Mary", "Matthew", "Michael", "Michelle", "Nancy", "Nicholas",
      "Oliver", "Patricia", "Patrick", "Paul", "Peter", "Rachel",
      "Raymond", "Rebecca", "Richard", "Robert", "Ronald", "Ruth",
      "Ryan", "Samuel", "Sandra", "Sarah", "Scott", "Sharon", "Sophia",
      "Stephen", "Steven", "Susan", "Thomas", "Timothy", "Victor",
      "Victoria", "Walter", "William", "Smith", "Johnson", "Williams",
      "Brown", "Jones", "Miller", "Davis", "Garcia", "Rodriguez",
      "Wilson", "Martinez", "Anderson", "Taylor", "Moore", "Jackson",
      "Martin", "Lee", "Thompson", "White", "Harris", "Clark", "Lewis",
      "Robinson", "Walker", "Young", "Allen", "King", "Wright", "Hall",
      "Turing", "Einstein", "Newton", "Darwin", "Curie", "Shannon",
      "Bayes", "Laplace", "Gauss", "Euler", "Fisher", "Pearson",
      "Markov", "Viterbi", "Chomsky"};
  return words;
}

const std::unordered_set<std::string>& location_names() {
  static const std::unordered_set<std::string> words{
      "Africa", "America", "Amsterdam", "Asia", "Athens", "Atlanta",
      "Australia", "Austria", "Baltimore", "Barcelona", "Beijing",
      "Belgium", "Berlin", "Boston", "Brazil", "Brussels", "California",
      "Canada", "Chicago", "China", "Copenhagen", "Dallas", "Denmark",
      "Denver", "Dublin", "Edinburgh", "Egypt", "England", "Europe",
      "Finland", "Florence", "Florida", "France", "Geneva", "Germany",
      "Greece", "Hamburg", "Helsinki", "Hungary", "India", "Ireland",
      "Israel", "Italy", "Japan", "Korea", "Lisbon", "London",
      "Madrid", "Melbourne", "Mexico", "Milan", "Montreal", "Moscow",
      "Munich", "Netherlands", "Norway", "Ohio", "Oslo", "Ottawa",
      "Oxford", "Paris", "Philadelphia", "Poland", "Portugal", "Prague",
      "Rome", "Russia", "Scotland", "Seattle", "Seoul", "Shanghai",
      "Singapore", "Spain", "Stockholm", "Sweden", "Switzerland",
      "Sydney", "Taiwan", "Texas", "Tokyo", "Toronto", "Turkey",
      "Vancouver", "Venice", "Vienna", "Virginia", "Warsaw",
      "Washington", "Zurich"};
  return words;
}

const std::unordered_set<std::string>& organization_names() {
  static const std::unordered_set<std::string> words{
      "ACL", "ACM", "AAAI", "Adobe", "Airbus", "Amazon", "Apache",
      "Apple", "Berkeley", "Boeing", "Bosch", "Caltech", "Cambridge",
      "Carnegie", "Cisco", "Columbia", "Cornell", "DARPA", "Dell",
      "EMNLP", "ETH", "Facebook", "Ford", "Fujitsu", "Google",
      "Harvard", "Hitachi", "Honda", "Huawei", "IBM", "ICDAR", "IEEE",
      "Intel", "MIT", "Microsoft", "Mozilla", "NAACL", "NASA", "NATO",
      "NEC", "NIST", "NSF", "Netflix", "Nokia", "Nvidia", "Oracle",
      "Panasonic", "Philips", "Princeton", "Samsung", "Siemens",
      "Sony", "Springer", "Stanford", "Tesla", "Toshiba", "Toyota",
      "Tsinghua", "UNESCO", "UNICEF", "Xerox", "Yahoo", "Yale"};
  return words;
}

const std::unordered_set<std::string>& month_names() {
  static const std::unordered_set<std::string> words{
      "january", "february", "march", "april", "may", "june", "july",
      "august", "september", "october", "november", "december", "jan",
      "feb", "mar", "apr", "jun", "jul", "aug", "sep", "sept", "oct",
      "nov", "dec"};
  return words;
}

}  // namespace tablescout::features::lexicon
