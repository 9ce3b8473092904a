"""Regenerate the bundled corpus under src/predred/data/corpus.

Deterministic: the same seed always writes the same files. Every program is
checked to parse and to be predicted as its own label by the bundled model.

    python tools/gen_corpus.py
"""

from __future__ import annotations

import random
from pathlib import Path

from predred.grammar import bundled_grammar
from predred.oracle import bundled_model
from predred.parser import parse_text

OUT = Path(__file__).resolve().parents[1] / "src" / "predred" / "data" / "corpus"
SEED = 20220517

DUBBO_MAIN = """public static void f(String[] args) {
    System.setProperty(
        Constants.DUBBO_PROPERTIES_KEY,
        "conf/dubbo.properties");
    Main.main(args);
}
"""

# label -> (headers, cores, tiny programs)
LABELS = {
    "equals": (
        ["@Override\npublic boolean f(Object obj)", "public boolean f(Object obj)", "public final boolean f(final Object obj)"],
        [
            ["if (this == obj) {", "    return true;", "}",
             "if (obj == null || getClass() != obj.getClass()) {", "    return false;", "}",
             "Point other = (Point) obj;", "return x == other.x && y == other.y;"],
            ["if (!(obj instanceof Stock)) {", "    return false;", "}",
             "Stock other = (Stock) obj;", "return symbol.equals(other.symbol);"],
            ["return obj instanceof Version && ((Version) obj).id == id;"],
        ],
        ["boolean f(Object obj) { return false; }"],
    ),
    "main": (
        ["public static void f(String[] args)", "public static void f(final String[] args) throws Exception"],
        [
            ["SpringApplication.run(Application.class, args);"],
            ["if (args.length < 1) {", '    System.err.println("usage: tool <file>");', "    System.exit(1);", "}",
             "Runner runner = new Runner(args[0]);", "runner.start();"],
            ["Options options = Options.parse(args);", "new Server(options).serve();"],
        ],
        ["void f(String args) { }", "public static void f(String[] args) { }"],
    ),
    "setUp": (
        ["@Override\nprotected void f() throws Exception", "public void f() throws Exception",
         "@Before\npublic void f() throws Exception"],
        [
            ["super.setUp();", "client = new TestClient(server.url());"],
            ["super.setUp();", "mockContext = mock(Context.class);", "service = new UserService(mockContext);"],
            ["super.setUp();"],
        ],
        [],
    ),
    "onCreate": (
        ["@Override\nprotected void f(Bundle savedInstanceState)", "public void f(Bundle savedInstanceState)"],
        [
            ["super.onCreate(savedInstanceState);", "setContentView(R.layout.activity_main);"],
            ["super.onCreate(savedInstanceState);",
             "getWindow().addFlags(WindowManager.LayoutParams.FLAG_KEEP_SCREEN_ON);",
             "setContentView(R.layout.main);", "Button button = (Button) findViewById(R.id.start);"],
        ],
        ["void f() { super.onCreate(null); }"],
    ),
    "toString": (
        ["@Override\npublic String f()", "public String f()"],
        [
            ["StringBuilder sb = new StringBuilder();", 'sb.append("Point[");',
             'sb.append(x).append(", ").append(y);', 'sb.append("]");', "return sb.toString();"],
            ['final StringBuilder sb = new StringBuilder("User{");', 'sb.append("name=").append(name);',
             "sb.append('}');", "return sb.toString();"],
        ],
        ["String f() { StringBuilder sb; return null; }"],
    ),
    "run": (
        ["@Override\npublic void f()", "@Override\npublic synchronized void f()"],
        [
            ["try {", "    while (running) {", "        Task task = queue.take();", "        task.perform();", "    }",
             "} catch (InterruptedException x) {", "    Thread.currentThread().interrupt();", "}"],
            ["try {", "    Thread.sleep(delay);", "    listener.onTimeout();", "} catch (Exception x) {",
             '    log.error("timer failed", x);', "}"],
        ],
        [],
    ),
    "hashCode": (
        ["@Override\npublic int f()", "public int f()"],
        [
            ["final int prime = 31;", "int result = 1;",
             "result = prime * result + ((name == null) ? 0 : name.hashCode());",
             "result = prime * result + age;", "return result;"],
            ["int prime = 37;", "int result = 17;", "result = prime * result + id;", "return result;"],
        ],
        ["int f() { return result * prime; }"],
    ),
    "init": (
        ["@Override\npublic void f(ServletConfig config) throws ServletException", "public void f() throws ServletException"],
        [
            ["super.init(config);", 'String path = config.getInitParameter("path");', "repository = new Repository(path);"],
            ["context = getServletContext();", 'dataSource = (DataSource) context.getAttribute("db");'],
        ],
        ["void f() throws ServletException { }"],
    ),
    "execute": (
        ["public void f() throws BuildException", "@Override\npublic void f() throws BuildException"],
        [
            ["if (file == null) {", '    throw new BuildException("file attribute is required");', "}",
             'log("Processing " + file.getName());', "process(file);"],
            ["validate();", "getProject().setProperty(property, value);"],
        ],
        ["void f() throws BuildException { }"],
    ),
    "get": (
        ["public T f(Object key)", "public T f(String key)", "@Override\npublic T f(K key)"],
        [
            ["if (key == null) {", '    throw new NullPointerException("key");', "}",
             "Entry<T> entry = table.get(key);", "return entry == null ? null : entry.value;"],
            ["T value = cache.get(key);", "if (value == null) {", "    value = loader.load(key);",
             "    cache.put(key, value);", "}", "return value;"],
        ],
        ["T f(Object key) { return null; }"],
    ),
}

RARE = {
    "swap": [
        "void f(int a, int b) {\n    int temp = a;\n    a = b;\n    b = temp;\n}\n",
        "void f(Node a, Node b) {\n    Object temp = a.value;\n    a.value = b.value;\n    b.value = temp;\n}\n",
    ],
    "isEmpty": [
        "public boolean f() {\n    return size == 0;\n}\n",
        "public boolean f() {\n    synchronized (lock) {\n        return size() == 0;\n    }\n}\n",
    ],
    "close": [
        "public void f() throws IOException {\n    if (stream != null) {\n        stream.close();\n        stream = null;\n    }\n}\n",
        "public void f() throws IOException {\n    closed = true;\n    channel.close();\n}\n",
    ],
    "clear": [
        "public void f() {\n    items.clear();\n    size = 0;\n}\n",
        "public void f() {\n    for (int i = 0; i < table.length; i++) {\n        table[i] = null;\n    }\n"
        "    modified = 0;\n    listeners.clear();\n}\n",
    ],
    "size": [
        "public int f() {\n    return count;\n}\n",
        "public int f() {\n    int count = 0;\n    for (Node n = head; n != null; n = n.next) {\n        count++;\n    }\n"
        "    return count;\n}\n",
    ],
}

NAMES = ["value", "index", "total", "name", "item", "node", "buffer", "offset", "limit", "flag", "path", "line",
         "entry", "current", "data", "message", "width", "height", "counter", "status", "timeout", "retries"]
MESSAGES = ["starting", "done", "invalid state", "retrying", "cache miss", "loaded", "skipping entry", "flush"]

FILLERS = [
    ["int {v} = {n};"],
    ['String {v} = "{s}";'],
    ["{v} = {w} + {n};"],
    ["if ({v} > {n}) {", "    {w} = {v};", "}"],
    ['log.debug("{s}");'],
    ["for (int i = 0; i < {v}; i++) {", "    {w} += i;", "}"],
    ["List<String> {v} = new ArrayList<>();"],
    ["{v}.add({w});"],
    ["while ({v} != null) {", "    {v} = {v}.next;", "}"],
    ["boolean {v} = {w} != null && {w}.isValid();"],
    ["if ({v} == null) {", '    throw new IllegalStateException("{s}");', "}"],
    ["Map<String, Integer> {v} = new HashMap<String, Integer>();"],
    ["double {v} = (double) {w} / {n};"],
    ["int[] {v} = new int[{n}];"],
    ['String[] {v} = {w}.split(",");'],
    ["synchronized (this) {", "    {v}++;", "}"],
    ["this.{v} = {w};"],
    ['System.out.println("{s}" + {v});'],
    ["for (String {v} : {w}) {", "    process({v});", "}"],
    ["{v} = Math.max({v}, {w});"],
    ["if (!{v}.isEmpty()) {", "    {w} = {v}.get(0);", "} else {", "    {w} = null;", "}"],
]


def filler(rng: random.Random) -> list:
    v, w = rng.sample(NAMES, 2)
    template = rng.choice(FILLERS)
    n = rng.choice([0, 1, 2, 8, 16, 64, 100])
    s = rng.choice(MESSAGES)
    subs = {"{v}": v, "{w}": w, "{n}": str(n), "{s}": s}
    out = []
    for line in template:
        for k, val in subs.items():
            line = line.replace(k, val)
        out.append(line)
    return out


def nest(rng: random.Random, lines: list) -> list:
    head = rng.choice(["if (debug) {", "if (" + rng.choice(NAMES) + " != null) {", "synchronized (lock) {"])
    return [head] + ["    " + ln for ln in lines] + ["}"]


def method(header: str, body: list) -> str:
    return header + " {\n" + "".join("    " + ln + "\n" for ln in body) + "}\n"


def build(rng: random.Random, header: str, core: list, n_fillers: int, nested: bool) -> str:
    fill = []
    for _ in range(n_fillers):
        chunk = filler(rng)
        if nested and rng.random() < 0.3:
            chunk = nest(rng, chunk + filler(rng))
        fill.append(chunk)
    if core and core[-1].startswith("return"):
        before, after = fill, []
    else:
        cut = rng.randint(0, len(fill))
        before, after = fill[:cut], fill[cut:]
    body = [ln for chunk in before for ln in chunk] + core + [ln for chunk in after for ln in chunk]
    return method(header, body)


def programs_for(label: str, rng: random.Random):
    headers, cores, tiny = LABELS[label]
    out = []
    if label == "main":
        out.append((DUBBO_MAIN, "frequent"))
    for t in tiny:
        out.append((t + "\n", "small"))
    while sum(1 for _, k in out if k == "small") < 3:
        out.append((build(rng, rng.choice(headers), rng.choice(cores), 0, False), "small"))
    while sum(1 for _, k in out if k == "frequent") < 4:
        out.append((build(rng, rng.choice(headers), rng.choice(cores), rng.randint(2, 5), False), "frequent"))
    while len(out) < 10:
        out.append((build(rng, rng.choice(headers), rng.choice(cores), rng.randint(10, 18), True), "large"))
    return out


def main() -> None:
    grammar = bundled_grammar()
    model = bundled_model()
    rng = random.Random(SEED)
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.java"):
        old.unlink()
    rows = []
    plan = [(label, programs_for(label, rng)) for label in LABELS]
    plan += [(label, [(src, "rare") for src in srcs]) for label, srcs in RARE.items()]
    for label, programs in plan:
        for i, (src, kind) in enumerate(programs):
            for attempt in range(50):
                parse_text(grammar, src)
                if model.label(src) == label:
                    break
                # redraw generated programs that trip another signature
                headers, cores, _ = LABELS[label]
                src = build(rng, rng.choice(headers), rng.choice(cores), rng.randint(2, 18), kind == "large")
            else:
                raise SystemExit(f"could not build a {label} program")
            name = f"{label}_{i:02d}.java"
            (OUT / name).write_text(src)
            rows.append(f"{name}\t{label}\t{kind}")
    (OUT / "corpus.tsv").write_text("path\tlabel\tinput_type\n" + "\n".join(rows) + "\n")
    print(f"wrote {len(rows)} programs to {OUT}")


if __name__ == "__main__":
    main()
