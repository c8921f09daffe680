/* io: inputs=2 outputs=2 */
#include <stdio.h>
int main()
{
    int count, i, score, good, poor;
    scanf("%d", &count);
    good = 0;
    poor = 0;
    i = 0;
    while (i < count)
    {
        scanf("%d", &score);
        if (score >= 80)
            good = good + 1;
        else
        {
            if (score < 40)
                poor = poor + 1;
        }
        i = i + 1;
    }
    if (good > poor)
        printf("mostly good\n");
    printf("good %d poor %d\n", good, poor);
    return 0;
}
