public static void f(String[] args) {
    for (int i = 0; i < entry; i++) {
        limit += i;
    }
    Options options = Options.parse(args);
    new Server(options).serve();
    List<String> name = new ArrayList<>();
}
